//! Cyclic column words for prism graphs.
//!
//! A subset of the prism's vertices is encoded one column per letter:
//! `C` selects nothing, `A` the top vertex, `B` the bottom vertex and
//! `D` both. Domination then becomes a pair of row constraints on each
//! window of three adjacent letters, which turns minimum-dominating-set
//! counting into a weighted scan over a 16-state transfer automaton and
//! makes exhaustive enumeration of the minimum words cheap.
//!
//! [`count_min_words`] and [`enumerate_min_words`] share per-root
//! completion tables: for every choice of the first two letters a
//! backward pass records the cheapest way to finish the word (including
//! the wrap-around constraints), so the forward pass only ever walks
//! prefixes of actual minimum words.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Column letter; bit pattern (top, bottom) is C=(0,0), A=(1,0),
/// B=(0,1), D=(1,1). Declaration order fixes the lexicographic order
/// used everywhere: C < A < B < D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    C,
    A,
    B,
    D,
}

pub const ALPHABET: [Letter; 4] = [Letter::C, Letter::A, Letter::B, Letter::D];

impl Letter {
    pub fn top(self) -> bool {
        matches!(self, Letter::A | Letter::D)
    }

    pub fn bottom(self) -> bool {
        matches!(self, Letter::B | Letter::D)
    }

    pub fn weight(self) -> usize {
        self.top() as usize + self.bottom() as usize
    }

    pub fn from_bits(top: bool, bottom: bool) -> Letter {
        match (top, bottom) {
            (false, false) => Letter::C,
            (true, false) => Letter::A,
            (false, true) => Letter::B,
            (true, true) => Letter::D,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::C => 'C',
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::D => 'D',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'C' => Ok(Letter::C),
            'A' => Ok(Letter::A),
            'B' => Ok(Letter::B),
            'D' => Ok(Letter::D),
            other => Err(Error::BadLetter(other)),
        }
    }

}

/// Cyclic word over {C, A, B, D}, length >= 3, indexed modulo its length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Word> {
        if letters.len() < 3 {
            return Err(Error::WordTooShort(letters.len()));
        }
        Ok(Word(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Letter at cyclic position `i` (any integer offset welcome).
    pub fn cyclic(&self, i: isize) -> Letter {
        let n = self.0.len() as isize;
        self.0[i.rem_euclid(n) as usize]
    }

    /// Number of selected vertices: #A + #B + 2#D.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|l| l.weight()).sum()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    /// Cyclic shift: `rotate(w, k)[i] = w[(i + k) mod n]`.
    pub fn rotate(&self, k: usize) -> Word {
        let n = self.0.len();
        Word((0..n).map(|i| self.0[(i + k) % n]).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::new(s.chars().map(Letter::from_char).collect::<Result<_>>()?)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Word for a vertex subset of the order-`n` prism (top row `0..n`,
/// bottom row `n..2n`).
pub fn encode(s: VertexSet, n: usize) -> Result<Word> {
    if n < 3 {
        return Err(Error::WordTooShort(n));
    }
    if !s.is_subset_of(VertexSet::full(2 * n)) {
        return Err(Error::VertexOutOfRange {
            vertex: s.iter().last().unwrap_or(0),
            n_vertices: 2 * n,
        });
    }
    Ok(Word(
        (0..n)
            .map(|i| Letter::from_bits(s.contains(i), s.contains(n + i)))
            .collect(),
    ))
}

/// Inverse of [`encode`].
pub fn decode(w: &Word) -> VertexSet {
    let n = w.len();
    let mut s = VertexSet::EMPTY;
    for (i, l) in w.letters().iter().enumerate() {
        if l.top() {
            s.insert(i);
        }
        if l.bottom() {
            s.insert(n + i);
        }
    }
    s
}

/// Both row constraints at the column holding `cur`, given its cyclic
/// neighbors. Top row: some of {cur, cur's partner, prev-top, next-top}
/// is selected; bottom row symmetric.
fn column_covered(prev: Letter, cur: Letter, next: Letter) -> bool {
    let top = cur.top() || cur.bottom() || prev.top() || next.top();
    let bottom = cur.bottom() || cur.top() || prev.bottom() || next.bottom();
    top && bottom
}

/// True iff the encoded set dominates the prism: the local constraint
/// pair holds at every index.
pub fn satisfies_constraints(w: &Word) -> bool {
    let n = w.len() as isize;
    (0..n).all(|i| column_covered(w.cyclic(i - 1), w.cyclic(i), w.cyclic(i + 1)))
}

const INF: u32 = u32::MAX / 2;

fn letter_weight(idx: usize) -> u32 {
    ALPHABET[idx].weight() as u32
}

fn transition_ok(a: usize, b: usize, c: usize) -> bool {
    column_covered(ALPHABET[a], ALPHABET[b], ALPHABET[c])
}

/// Per-root completion tables. `rem[root][i][4a + b]` is the cheapest
/// total weight of positions `i+1 .. n-1` when positions up to `i` are
/// placed, the last two being `(a, b)`, counting the wrap-around
/// constraints against the root letters `(w_0, w_1)`.
struct SearchTables {
    n: usize,
    gamma: u32,
    rem: Vec<Vec<[u32; 16]>>,
}

fn build_tables(n: usize) -> Result<SearchTables> {
    if n < 3 {
        return Err(Error::WordTooShort(n));
    }
    let mut rem = Vec::with_capacity(16);
    let mut gamma = INF;
    for r0 in 0..4 {
        for r1 in 0..4 {
            let mut table = vec![[INF; 16]; n];
            for a in 0..4 {
                for b in 0..4 {
                    if transition_ok(a, b, r0) && transition_ok(b, r0, r1) {
                        table[n - 1][4 * a + b] = 0;
                    }
                }
            }
            for i in (1..n - 1).rev() {
                for a in 0..4 {
                    for b in 0..4 {
                        let mut best = INF;
                        for c in 0..4 {
                            if transition_ok(a, b, c) {
                                best = best.min(letter_weight(c) + table[i + 1][4 * b + c]);
                            }
                        }
                        table[i][4 * a + b] = best;
                    }
                }
            }
            let root_total =
                letter_weight(r0) + letter_weight(r1) + table[1][4 * r0 + r1].min(INF);
            gamma = gamma.min(root_total);
            rem.push(table);
        }
    }
    debug_assert!(gamma < INF, "the all-D word always satisfies the constraints");
    Ok(SearchTables { n, gamma, rem })
}

/// Minimum weight over all constraint-satisfying cyclic words of length
/// `n`, together with the exact number of words attaining it.
pub fn count_min_words(n: usize) -> Result<(usize, u64)> {
    let tables = build_tables(n)?;
    let gamma = tables.gamma;
    let mut total: u64 = 0;

    // Sparse per-state (weight, count) lists; backward pruning keeps
    // only prefixes of actual minimum words, so counts stay <= zeta.
    type Layer = Vec<Vec<(u32, u64)>>;
    let mut scratch: Layer = vec![Vec::new(); 16];
    let mut next: Layer = vec![Vec::new(); 16];

    for r0 in 0..4 {
        for r1 in 0..4 {
            let table = &tables.rem[4 * r0 + r1];
            let w01 = letter_weight(r0) + letter_weight(r1);
            if w01 + table[1][4 * r0 + r1] > gamma {
                continue;
            }
            for s in scratch.iter_mut() {
                s.clear();
            }
            scratch[4 * r0 + r1].push((w01, 1));

            for i in 1..=n - 2 {
                for s in next.iter_mut() {
                    s.clear();
                }
                for a in 0..4 {
                    for b in 0..4 {
                        let entries = &scratch[4 * a + b];
                        if entries.is_empty() {
                            continue;
                        }
                        for c in 0..4 {
                            if !transition_ok(a, b, c) {
                                continue;
                            }
                            let sn = 4 * b + c;
                            let future = table[i + 1][sn];
                            for &(wt, cnt) in entries {
                                let wt2 = wt + letter_weight(c);
                                if wt2 + future > gamma {
                                    continue;
                                }
                                match next[sn].iter_mut().find(|(w, _)| *w == wt2) {
                                    Some((_, c0)) => {
                                        *c0 = c0.checked_add(cnt).ok_or(Error::CountOverflow)?
                                    }
                                    None => next[sn].push((wt2, cnt)),
                                }
                            }
                        }
                    }
                }
                std::mem::swap(&mut scratch, &mut next);
            }

            for (s, entries) in scratch.iter().enumerate() {
                if table[n - 1][s] != 0 {
                    continue;
                }
                for &(wt, cnt) in entries {
                    debug_assert_eq!(wt, gamma);
                    total = total.checked_add(cnt).ok_or(Error::CountOverflow)?;
                }
            }
        }
    }
    Ok((gamma as usize, total))
}

/// All constraint-satisfying words of minimum weight, in lexicographic
/// order under C < A < B < D.
pub fn enumerate_min_words(n: usize) -> Result<Vec<Word>> {
    let tables = build_tables(n)?;
    let gamma = tables.gamma;
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(n);

    for r0 in 0..4 {
        for r1 in 0..4 {
            let table = &tables.rem[4 * r0 + r1];
            let w01 = letter_weight(r0) + letter_weight(r1);
            if w01 + table[1][4 * r0 + r1] > gamma {
                continue;
            }
            prefix.clear();
            prefix.extend([r0, r1]);
            dfs(&tables, table, gamma, w01, &mut prefix, &mut out);
        }
    }
    Ok(out)
}

fn dfs(
    tables: &SearchTables,
    table: &[[u32; 16]],
    gamma: u32,
    weight: u32,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Word>,
) {
    let i = prefix.len() - 1;
    if i == tables.n - 1 {
        debug_assert_eq!(weight, gamma);
        out.push(Word(prefix.iter().map(|&l| ALPHABET[l]).collect()));
        return;
    }
    let (a, b) = (prefix[i - 1], prefix[i]);
    for c in 0..4 {
        if !transition_ok(a, b, c) {
            continue;
        }
        let wt2 = weight + letter_weight(c);
        if wt2 + table[i + 1][4 * b + c] > gamma {
            continue;
        }
        prefix.push(c);
        dfs(tables, table, gamma, wt2, prefix, out);
        prefix.pop();
    }
}

/// Positions of `C` letters and the singleton-run lengths between
/// cyclically consecutive `C`s. Defined only for D-free words with at
/// least one `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    pub c_positions: Vec<usize>,
    /// `gap_sizes[j]` is the run length following `c_positions[j]`.
    pub gap_sizes: Vec<usize>,
}

pub fn gap_profile(w: &Word) -> Result<GapProfile> {
    if w.contains(Letter::D) {
        return Err(Error::GapProfile("word contains a doubled column"));
    }
    let c_positions: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::C)
        .map(|(i, _)| i)
        .collect();
    if c_positions.is_empty() {
        return Err(Error::GapProfile("word contains no empty column"));
    }
    let n = w.len();
    let m = c_positions.len();
    let gap_sizes = (0..m)
        .map(|j| (c_positions[(j + 1) % m] + n - c_positions[j] - 1) % n)
        .collect();
    Ok(GapProfile {
        c_positions,
        gap_sizes,
    })
}

impl GapProfile {
    /// Letters inside gap `j` of `w`, in cyclic order.
    pub fn gap_letters(&self, w: &Word, j: usize) -> Vec<Letter> {
        let start = self.c_positions[j] + 1;
        (0..self.gap_sizes[j])
            .map(|k| w.cyclic((start + k) as isize))
            .collect()
    }
}

/// Indices `j` whose trailing window `(w[j-4], w[j-3], w[j-2], w[j-1])`
/// reads `(C, e, e, C)` for a single letter `e` in {A, B}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndSet {
    pub indices: Vec<usize>,
}

pub fn end_set(w: &Word) -> EndSet {
    let n = w.len() as isize;
    let indices = (0..n)
        .filter(|&j| {
            let (a, b, c, d) = (
                w.cyclic(j - 4),
                w.cyclic(j - 3),
                w.cyclic(j - 2),
                w.cyclic(j - 1),
            );
            a == Letter::C
                && d == Letter::C
                && b == c
                && matches!(b, Letter::A | Letter::B)
        })
        .map(|j| j as usize)
        .collect();
    EndSet { indices }
}

/// Free-function form of [`Word::rotate`].
pub fn rotate(w: &Word, k: usize) -> Word {
    w.rotate(k)
}

/// One structural property evaluated over the minimum words of a given
/// order. A failed check always carries the first offending word.
#[derive(Debug, Clone, Serialize)]
pub struct StructureCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub passed: bool,
    pub counterexample: Option<Word>,
    pub detail: String,
}

impl StructureCheck {
    fn not_applicable(name: &'static str) -> Self {
        StructureCheck {
            name,
            applicable: false,
            passed: true,
            counterexample: None,
            detail: "not applicable at this order".into(),
        }
    }

    fn pass(name: &'static str, detail: String) -> Self {
        StructureCheck {
            name,
            applicable: true,
            passed: true,
            counterexample: None,
            detail,
        }
    }

    fn fail(name: &'static str, counterexample: Option<Word>, detail: String) -> Self {
        StructureCheck {
            name,
            applicable: true,
            passed: false,
            counterexample,
            detail,
        }
    }
}

/// Structural survey of all minimum words for order `n`: per-property
/// pass/fail with counterexamples, plus the anchored-word count in the
/// `n = 2 mod 4` regime.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub gamma: usize,
    pub word_count: u64,
    pub anchored_count: Option<u64>,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n={} gamma={} minimum words={}{}",
            self.n,
            self.gamma,
            self.word_count,
            match self.anchored_count {
                Some(a) => format!(" anchored={a}"),
                None => String::new(),
            }
        );
        for c in &self.checks {
            let status = if !c.applicable {
                "n/a "
            } else if c.passed {
                "pass"
            } else {
                "FAIL"
            };
            let _ = write!(out, "  [{status}] {:<28} {}", c.name, c.detail);
            if let Some(w) = &c.counterexample {
                let _ = write!(out, " (counterexample {w})");
            }
            out.push('\n');
        }
        out
    }
}

/// Evaluates every applicable structural property over the enumerated
/// minimum words of order `n`. Failures are reported, never thrown.
pub fn check_structure(n: usize) -> Result<StructureReport> {
    let words = enumerate_min_words(n)?;
    let gamma = words.first().map(|w| w.weight()).unwrap_or(0);
    let mod2_regime = n % 4 == 2 && n >= 10;

    let mut checks = Vec::new();

    // No doubled column in any minimum word.
    checks.push(if n >= 4 {
        match words.iter().find(|w| w.contains(Letter::D)) {
            None => StructureCheck::pass("no_doubles", "no minimum word uses a doubled column".into()),
            Some(w) => {
                let bad = words.iter().filter(|w| w.contains(Letter::D)).count();
                StructureCheck::fail(
                    "no_doubles",
                    Some(w.clone()),
                    format!("{bad} of {} minimum words contain a doubled column", words.len()),
                )
            }
        }
    } else {
        StructureCheck::not_applicable("no_doubles")
    });

    // Adjacent empty columns force doubled flanks.
    checks.push({
        let offender = words.iter().find(|w| !cc_flanked_by_doubles(w));
        match offender {
            None => StructureCheck::pass(
                "cc_flanked_by_doubles",
                "every CC factor is flanked by doubled columns".into(),
            ),
            Some(w) => StructureCheck::fail(
                "cc_flanked_by_doubles",
                Some(w.clone()),
                "CC factor without doubled flanks".into(),
            ),
        }
    });

    // The neighbors of an empty column jointly cover both rows.
    checks.push({
        let offender = words.iter().find(|w| !empty_columns_covered(w));
        match offender {
            None => StructureCheck::pass(
                "empty_column_neighbor_cover",
                "neighbors of every empty column cover both rows".into(),
            ),
            Some(w) => StructureCheck::fail(
                "empty_column_neighbor_cover",
                Some(w.clone()),
                "empty column whose neighbors miss a row".into(),
            ),
        }
    });

    // Orders divisible by 4: exactly the four periodic words.
    checks.push(if n % 4 == 0 {
        let base: Word = Word(
            [Letter::B, Letter::C, Letter::A, Letter::C]
                .iter()
                .copied()
                .cycle()
                .take(n)
                .collect(),
        );
        let expected: std::collections::BTreeSet<Word> =
            (0..4).map(|k| base.rotate(k)).collect();
        let actual: std::collections::BTreeSet<Word> = words.iter().cloned().collect();
        if expected == actual {
            StructureCheck::pass(
                "mod0_exactly_four_periodic",
                "the four period-4 alternating words, nothing else".into(),
            )
        } else {
            let stray = actual.difference(&expected).next().cloned();
            StructureCheck::fail(
                "mod0_exactly_four_periodic",
                stray.or_else(|| expected.difference(&actual).next().cloned()),
                format!("expected the 4 periodic words, found {}", actual.len()),
            )
        }
    } else {
        StructureCheck::not_applicable("mod0_exactly_four_periodic")
    });

    // Odd orders: one size-2 gap, monochromatic, alternation elsewhere.
    checks.push(if n % 2 == 1 && n >= 5 {
        match words.iter().find_map(|w| odd_gap_violation(w)) {
            None => StructureCheck::pass(
                "odd_unique_mono_gap",
                "every word has a unique monochromatic size-2 gap".into(),
            ),
            Some((w, why)) => StructureCheck::fail("odd_unique_mono_gap", Some(w), why),
        }
    } else {
        StructureCheck::not_applicable("odd_unique_mono_gap")
    });

    // n = 2 mod 4, n >= 10: claimed rigid two-gap geometry.
    if mod2_regime {
        let t = (n - 2) / 4;

        checks.push(match words.iter().find_map(|w| two_mono_gap_violation(w)) {
            None => StructureCheck::pass(
                "mod2_two_mono_gaps",
                "every word has exactly two monochromatic size-2 gaps".into(),
            ),
            Some((w, why)) => StructureCheck::fail("mod2_two_mono_gaps", Some(w), why),
        });

        checks.push(
            match words.iter().find(|w| end_set(w).indices.len() != 2) {
                None => StructureCheck::pass(
                    "mod2_end_pair",
                    "every word has exactly two gap-end indices".into(),
                ),
                Some(w) => StructureCheck::fail(
                    "mod2_end_pair",
                    Some(w.clone()),
                    format!("word has {} gap-end indices", end_set(w).indices.len()),
                ),
            },
        );

        checks.push(match words.iter().find(|w| !backbone_after_ends(w, t)) {
            None => StructureCheck::pass(
                "mod2_backbone",
                "4t letters after each gap end form the periodic backbone".into(),
            ),
            Some(w) => StructureCheck::fail(
                "mod2_backbone",
                Some(w.clone()),
                "letters after a gap end do not form the periodic backbone".into(),
            ),
        });

        checks.push(match words.iter().find_map(|w| nontrivial_period(w)) {
            None => StructureCheck::pass(
                "mod2_trivial_stabilizer",
                "no minimum word is fixed by a nontrivial rotation".into(),
            ),
            Some((w, k)) => StructureCheck::fail(
                "mod2_trivial_stabilizer",
                Some(w),
                format!("word fixed by rotation k={k}"),
            ),
        });

        checks.push(orbit_structure_check(&words, n));
    } else {
        for name in [
            "mod2_two_mono_gaps",
            "mod2_end_pair",
            "mod2_backbone",
            "mod2_trivial_stabilizer",
            "mod2_orbit_structure",
        ] {
            checks.push(StructureCheck::not_applicable(name));
        }
    }

    let anchored_count = mod2_regime.then(|| {
        words
            .iter()
            .filter(|w| end_set(w).indices.contains(&0))
            .count() as u64
    });

    Ok(StructureReport {
        n,
        gamma,
        word_count: words.len() as u64,
        anchored_count,
        checks,
    })
}

/// Lemma-style implication checked on any dominating word: a CC factor
/// forces doubled columns on both flanks.
pub fn cc_flanked_by_doubles(w: &Word) -> bool {
    let n = w.len() as isize;
    (0..n).all(|i| {
        w.cyclic(i) != Letter::C
            || w.cyclic(i + 1) != Letter::C
            || (w.cyclic(i - 1) == Letter::D && w.cyclic(i + 2) == Letter::D)
    })
}

/// The two neighbors of every empty column jointly select both rows.
pub fn empty_columns_covered(w: &Word) -> bool {
    let n = w.len() as isize;
    (0..n).all(|i| {
        if w.cyclic(i) != Letter::C {
            return true;
        }
        let (l, r) = (w.cyclic(i - 1), w.cyclic(i + 1));
        (l.top() || r.top()) && (l.bottom() || r.bottom())
    })
}

fn odd_gap_violation(w: &Word) -> Option<(Word, String)> {
    if w.contains(Letter::D) {
        return Some((w.clone(), "contains a doubled column".into()));
    }
    let profile = gap_profile(w).ok()?;
    let twos: Vec<usize> = (0..profile.gap_sizes.len())
        .filter(|&j| profile.gap_sizes[j] == 2)
        .collect();
    let others_single = profile.gap_sizes.iter().all(|&g| g == 1 || g == 2);
    if twos.len() != 1 || !others_single {
        return Some((w.clone(), format!("gap sizes {:?}", profile.gap_sizes)));
    }
    let letters = profile.gap_letters(w, twos[0]);
    if letters[0] != letters[1] {
        let kind: String = letters.iter().map(|l| l.as_char()).collect();
        return Some((w.clone(), format!("size-2 gap is mixed ({kind})")));
    }
    None
}

fn two_mono_gap_violation(w: &Word) -> Option<(Word, String)> {
    if w.contains(Letter::D) {
        return Some((w.clone(), "contains a doubled column".into()));
    }
    let profile = gap_profile(w).ok()?;
    let mut sizes = profile.gap_sizes.clone();
    sizes.sort_unstable();
    let m = sizes.len();
    let expected_ok = m >= 2 && sizes[..m - 2].iter().all(|&g| g == 1) && sizes[m - 2..] == [2, 2];
    if !expected_ok {
        return Some((w.clone(), format!("gap sizes {:?}", profile.gap_sizes)));
    }
    for j in 0..m {
        if profile.gap_sizes[j] == 2 {
            let letters = profile.gap_letters(w, j);
            if letters[0] != letters[1] {
                let kind: String = letters.iter().map(|l| l.as_char()).collect();
                return Some((w.clone(), format!("size-2 gap is mixed ({kind})")));
            }
        }
    }
    None
}

fn backbone_after_ends(w: &Word, t: usize) -> bool {
    let backbone = |first: Letter, second: Letter| -> Vec<Letter> {
        [Letter::C, first, Letter::C, second]
            .iter()
            .copied()
            .cycle()
            .take(4 * t)
            .collect()
    };
    let variants = [
        backbone(Letter::A, Letter::B),
        backbone(Letter::B, Letter::A),
    ];
    end_set(w).indices.iter().all(|&j| {
        let seg: Vec<Letter> = (0..4 * t).map(|k| w.cyclic((j + k) as isize)).collect();
        variants.contains(&seg)
    })
}

fn nontrivial_period(w: &Word) -> Option<(Word, usize)> {
    (1..w.len())
        .find(|&k| w.rotate(k) == *w)
        .map(|k| (w.clone(), k))
}

fn orbit_structure_check(words: &[Word], n: usize) -> StructureCheck {
    let mut orbits: BTreeMap<Word, Vec<&Word>> = BTreeMap::new();
    for w in words {
        let canon = (0..n).map(|k| w.rotate(k)).min().expect("n >= 3");
        orbits.entry(canon).or_default().push(w);
    }
    for members in orbits.values() {
        if members.len() != n {
            return StructureCheck::fail(
                "mod2_orbit_structure",
                Some(members[0].clone()),
                format!("rotation orbit has size {} (expected {n})", members.len()),
            );
        }
        let anchored = members
            .iter()
            .filter(|w| end_set(w).indices.contains(&0))
            .count();
        if anchored != 2 {
            return StructureCheck::fail(
                "mod2_orbit_structure",
                Some(members[0].clone()),
                format!("orbit contains {anchored} anchored words (expected 2)"),
            );
        }
    }
    StructureCheck::pass(
        "mod2_orbit_structure",
        format!("{} orbits, each of size {n} with two anchored words", orbits.len()),
    )
}
