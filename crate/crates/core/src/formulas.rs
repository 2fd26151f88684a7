//! Closed-form domination number and dominion for prisms.

use serde::Serialize;

use crate::error::{Error, Result};

/// Congruence regime of a prism order, with the two orders whose
/// dominion departs from the generic formulas broken out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Mod0,
    Odd,
    Mod2,
    Exceptional3,
    Exceptional6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrismFormulaResult {
    pub n: usize,
    pub gamma: usize,
    pub zeta: u64,
    pub regime: Regime,
}

fn require_order(n: usize) -> Result<()> {
    if n >= 3 {
        Ok(())
    } else {
        Err(Error::ParamRange {
            family: "prism".into(),
            detail: format!("n={n}, need n>=3"),
        })
    }
}

/// Domination number of the order-`n` prism: n/2, (n+1)/2 or n/2 + 1
/// according to n mod 4.
pub fn gamma_formula(n: usize) -> Result<usize> {
    require_order(n)?;
    Ok(match n % 4 {
        0 => n / 2,
        1 | 3 => (n + 1) / 2,
        _ => n / 2 + 1,
    })
}

/// Dominion of the order-`n` prism. The exceptional orders 3 and 6 are
/// dispatched before the congruence split.
pub fn zeta_formula(n: usize) -> Result<u64> {
    require_order(n)?;
    Ok(match n {
        3 => 9,
        6 => 51,
        _ => match n % 4 {
            0 => 4,
            1 | 3 => 2 * n as u64,
            _ => (n as u64) * (n as u64 + 2),
        },
    })
}

pub fn prism_formula(n: usize) -> Result<PrismFormulaResult> {
    let regime = match n {
        3 => Regime::Exceptional3,
        6 => Regime::Exceptional6,
        _ => match n % 4 {
            0 => Regime::Mod0,
            1 | 3 => Regime::Odd,
            _ => Regime::Mod2,
        },
    };
    Ok(PrismFormulaResult {
        n,
        gamma: gamma_formula(n)?,
        zeta: zeta_formula(n)?,
        regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::count_min_words;

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_formula(9).unwrap(), 5);
        assert_eq!(gamma_formula(4).unwrap(), 2);
        assert_eq!(gamma_formula(6).unwrap(), 4);
        assert!(gamma_formula(2).is_err());
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_formula(3).unwrap(), 9);
        assert_eq!(zeta_formula(8).unwrap(), 4);
        assert_eq!(zeta_formula(10).unwrap(), 120);
        assert_eq!(zeta_formula(13).unwrap(), 26);
        assert!(zeta_formula(1).is_err());
    }

    #[test]
    fn regimes() {
        let tag = |n: usize| prism_formula(n).unwrap().regime;
        assert_eq!(tag(3), Regime::Exceptional3);
        assert_eq!(tag(6), Regime::Exceptional6);
        assert_eq!(tag(12), Regime::Mod0);
        assert_eq!(tag(11), Regime::Odd);
        assert_eq!(tag(14), Regime::Mod2);
        // only 3 and 6 are exceptional
        for n in 4..=40 {
            if n != 6 {
                assert!(!matches!(
                    tag(n),
                    Regime::Exceptional3 | Regime::Exceptional6
                ));
            }
        }
    }

    #[test]
    fn equilibrium_order_eight() {
        assert_eq!(gamma_formula(8).unwrap() as u64, zeta_formula(8).unwrap());
    }

    #[test]
    fn matches_word_count_small_range() {
        for n in 3..=40 {
            let (g, z) = count_min_words(n).unwrap();
            assert_eq!(g, gamma_formula(n).unwrap(), "gamma at n={n}");
            assert_eq!(z, zeta_formula(n).unwrap(), "zeta at n={n}");
        }
    }
}
