//! Closed-form EDS expressions in exact integer arithmetic.
//!
//! Every evaluator returns the polynomial value together with a flag that
//! says whether the parameters lie in the range where the expression is
//! claimed to hold. Values outside that range are still computed so they
//! can be compared against enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: i128,
    pub valid: bool,
}

impl Evaluation {
    fn new(value: i128, valid: bool) -> Evaluation {
        Evaluation { value, valid }
    }
}

/// `6n^2 + beta^2 + 9 beta n - 22n - 28 beta + 34`, valid for `beta >= 3`.
pub fn eds_t_n_beta(n: i128, beta: i128) -> Result<Evaluation> {
    if beta < 1 || n < 2 * beta {
        return Err(Error::param(format!("T(n, beta) needs 1 <= beta <= n/2, got n={n}, beta={beta}")));
    }
    let value = 6 * n * n + beta * beta + 9 * beta * n - 22 * n - 28 * beta + 34;
    Ok(Evaluation::new(value, beta >= 3))
}

/// EDS of `T^(m)` from the base tree's order, EDS, Wiener index and total
/// eccentricity.
pub fn corona_eds(n: i128, m: i128, eds: i128, wiener: i128, total_ecc: i128) -> Result<i128> {
    if m < 1 {
        return Err(Error::param(format!("m must be at least 1, got {m}")));
    }
    Ok((m + 1) * (m + 1) * eds
        + 2 * (2 * m + 1) * (m + 1) * wiener
        + 2 * m * (n * m + n - 1) * total_ecc
        + 4 * n * n * m * m
        + 3 * n * n * m
        - 4 * n * m)
}

fn small_side_ok(n: i128, p: i128) -> bool {
    p >= 3 && n - p >= p
}

pub fn f_s(n: i128, p: i128, s: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n - 4 * p + 16 * p * s - 16 * s * s - 16 * s + 18;
    Evaluation::new(value, small_side_ok(n, p) && s >= 1 && 2 * s < p)
}

/// Same polynomial as [`f_s`] with the large side `q`.
pub fn g_t(n: i128, q: i128, t: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * q - 7 * q * q - 22 * n - 4 * q + 16 * q * t - 16 * t * t - 16 * t + 18;
    let p = n - q;
    Evaluation::new(value, p >= 3 && p <= q && t >= 1 && 2 * t < q)
}

fn third_min_setting(n: i128, p: i128) -> bool {
    p >= 4 && p < n - p
}

pub fn f1(n: i128, p: i128, s: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 12 * p + 16 * p * s - 16 * s * s - 32 * s - 14;
    Evaluation::new(value, third_min_setting(n, p) && s >= 1 && s <= p - 3)
}

pub fn f2(n: i128, p: i128, t: i128) -> Evaluation {
    let value = 8 * n * n + 11 * n * p - 9 * p * p - 33 * n + 14 * p + 20 * n * t + 3 * p * t
        - 64 * t
        - 18 * t * t
        - 4;
    Evaluation::new(value, third_min_setting(n, p) && t >= 1 && t <= p - 3)
}

pub fn f3(n: i128, p: i128, r: i128) -> Evaluation {
    let value = 8 * n * n + 8 * n * p - 8 * p * p - 24 * n + 17 * p + 20 * n * r - 17 * p * r
        - 4 * r
        - 18 * r * r
        - 22;
    let q = n - p;
    Evaluation::new(value, third_min_setting(n, p) && r >= 1 && r <= q - 3)
}

pub fn eds_t1(n: i128, p: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 12 * p - 14;
    Evaluation::new(value, small_side_ok(n, p))
}

pub fn eds_t1_prime(n: i128, q: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * q - 7 * q * q - 22 * n + 12 * q - 14;
    let p = n - q;
    Evaluation::new(value, p >= 3 && p <= q)
}

/// Valid for `p >= 5`: below that `T_2` coincides with `T_1`.
pub fn eds_t2(n: i128, p: i128) -> Evaluation {
    let value = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 28 * p - 78;
    Evaluation::new(value, p >= 5 && n - p >= p)
}

pub fn eds_double_star(p: i128, q: i128) -> Result<i128> {
    if p < 2 || q < 2 {
        return Err(Error::param(format!("double star needs p, q >= 2, got ({p}, {q})")));
    }
    Ok(2 * (p + 2 * q - 2)
        + 2 * (q + 2 * p - 2)
        + 3 * (p - 1) * (2 * p + 3 * q - 4)
        + 3 * (q - 1) * (2 * q + 3 * p - 4))
}

pub fn eds_star(n: i128) -> Result<i128> {
    if n < 1 {
        return Err(Error::param("star needs n >= 1"));
    }
    Ok((n - 1) * (4 * n - 5))
}

/// Upper bound on total eccentricity of an `n`-vertex tree of diameter `d`:
/// `nd - d^2/4` for even `d`, `nd - d^2/4 + 1/4` for odd `d`.
pub fn total_ecc_path_bound(n: i128, d: i128) -> Result<i128> {
    if d < 2 || d > n - 1 {
        return Err(Error::param(format!("need 2 <= d <= n - 1, got n={n}, d={d}")));
    }
    let quadruple = 4 * n * d - d * d + (d % 2);
    Ok(quadruple / 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Paper,
    Rederived,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Paper => "paper",
            Variant::Rederived => "rederived",
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Variant::Paper),
            "rederived" => Ok(Variant::Rederived),
            other => Err(Error::Parse(format!("unknown variant '{other}'"))),
        }
    }
}

/// `EDS(T'_1) - EDS(T_2)` as printed.
pub fn threshold_paper(n: i128, p: i128) -> i128 {
    2 * n * n + 12 * n - 4 * n * p - 30 * p + 64
}

/// `g_t(n, q, 1) - f_s(n, p, 2)` expanded with `q = n - p`.
pub fn threshold_rederived(n: i128, p: i128) -> i128 {
    2 * n * n - 4 * n * p + 12 * n - 40 * p + 64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Winner {
    T2,
    T1Prime,
    Tie,
}

impl Winner {
    pub fn name(self) -> &'static str {
        match self {
            Winner::T2 => "T2",
            Winner::T1Prime => "T1Prime",
            Winner::Tie => "Tie",
        }
    }
}

/// Which tree has the third smallest EDS according to the sign of the
/// chosen quadratic. Positive means `T'_1` is larger, so `T_2` wins.
pub fn third_min_winner(n: i128, p: i128, variant: Variant) -> Result<Winner> {
    if !third_min_setting(n, p) {
        return Err(Error::param(format!("need 4 <= p < q with n = p + q, got n={n}, p={p}")));
    }
    let d = match variant {
        Variant::Paper => threshold_paper(n, p),
        Variant::Rederived => threshold_rederived(n, p),
    };
    Ok(match d.signum() {
        1 => Winner::T2,
        -1 => Winner::T1Prime,
        _ => Winner::Tie,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    EdsTnBeta,
    CoronaIdentity,
    FS,
    GT,
    F1,
    F2,
    F3,
    EdsT1,
    EdsT1Prime,
    EdsT2,
    EdsDoubleStar,
    TotalEccPathBound,
    ThresholdPaper,
    ThresholdRederived,
}

impl FormulaId {
    pub const ALL: [FormulaId; 14] = [
        FormulaId::EdsTnBeta,
        FormulaId::CoronaIdentity,
        FormulaId::FS,
        FormulaId::GT,
        FormulaId::F1,
        FormulaId::F2,
        FormulaId::F3,
        FormulaId::EdsT1,
        FormulaId::EdsT1Prime,
        FormulaId::EdsT2,
        FormulaId::EdsDoubleStar,
        FormulaId::TotalEccPathBound,
        FormulaId::ThresholdPaper,
        FormulaId::ThresholdRederived,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::EdsTnBeta => "eds-tn-beta",
            FormulaId::CoronaIdentity => "corona-identity",
            FormulaId::FS => "f-s",
            FormulaId::GT => "g-t",
            FormulaId::F1 => "f1",
            FormulaId::F2 => "f2",
            FormulaId::F3 => "f3",
            FormulaId::EdsT1 => "eds-t1",
            FormulaId::EdsT1Prime => "eds-t1-prime",
            FormulaId::EdsT2 => "eds-t2",
            FormulaId::EdsDoubleStar => "eds-double-star",
            FormulaId::TotalEccPathBound => "total-ecc-path-bound",
            FormulaId::ThresholdPaper => "threshold-paper",
            FormulaId::ThresholdRederived => "threshold-rederived",
        }
    }

    /// Names of the positional parameters, in order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            FormulaId::EdsTnBeta => &["n", "beta"],
            FormulaId::CoronaIdentity => &["n", "m", "eds", "wiener", "total_ecc"],
            FormulaId::FS | FormulaId::F1 => &["n", "p", "s"],
            FormulaId::GT => &["n", "q", "t"],
            FormulaId::F2 => &["n", "p", "t"],
            FormulaId::F3 => &["n", "p", "r"],
            FormulaId::EdsT1 | FormulaId::EdsT2 => &["n", "p"],
            FormulaId::EdsT1Prime => &["n", "q"],
            FormulaId::EdsDoubleStar => &["p", "q"],
            FormulaId::TotalEccPathBound => &["n", "d"],
            FormulaId::ThresholdPaper | FormulaId::ThresholdRederived => &["n", "p"],
        }
    }

    pub fn evaluate(self, args: &[i128]) -> Result<Evaluation> {
        let names = self.params();
        if args.len() != names.len() {
            return Err(Error::param(format!(
                "{} takes {} parameters ({}), got {}",
                self.name(),
                names.len(),
                names.join(","),
                args.len()
            )));
        }
        let a = args;
        Ok(match self {
            FormulaId::EdsTnBeta => eds_t_n_beta(a[0], a[1])?,
            FormulaId::CoronaIdentity => Evaluation::new(corona_eds(a[0], a[1], a[2], a[3], a[4])?, true),
            FormulaId::FS => f_s(a[0], a[1], a[2]),
            FormulaId::GT => g_t(a[0], a[1], a[2]),
            FormulaId::F1 => f1(a[0], a[1], a[2]),
            FormulaId::F2 => f2(a[0], a[1], a[2]),
            FormulaId::F3 => f3(a[0], a[1], a[2]),
            FormulaId::EdsT1 => eds_t1(a[0], a[1]),
            FormulaId::EdsT1Prime => eds_t1_prime(a[0], a[1]),
            FormulaId::EdsT2 => eds_t2(a[0], a[1]),
            FormulaId::EdsDoubleStar => Evaluation::new(eds_double_star(a[0], a[1])?, true),
            FormulaId::TotalEccPathBound => Evaluation::new(total_ecc_path_bound(a[0], a[1])?, true),
            FormulaId::ThresholdPaper => Evaluation::new(threshold_paper(a[0], a[1]), third_min_setting(a[0], a[1])),
            FormulaId::ThresholdRederived => {
                Evaluation::new(threshold_rederived(a[0], a[1]), third_min_setting(a[0], a[1]))
            }
        })
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown formula '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_n_beta_values_and_flags() {
        assert_eq!(eds_t_n_beta(8, 3).unwrap(), Evaluation::new(383, true));
        assert_eq!(eds_t_n_beta(4, 1).unwrap(), Evaluation::new(51, false));
        assert_eq!(eds_t_n_beta(5, 2).unwrap(), Evaluation::new(112, false));
        assert!(eds_t_n_beta(5, 3).is_err());
        assert!(eds_t_n_beta(5, 0).is_err());
    }

    #[test]
    fn corona_of_p2() {
        assert_eq!(corona_eds(2, 1, 2, 1, 2).unwrap(), 52);
        assert!(corona_eds(2, 0, 2, 1, 2).is_err());
    }

    #[test]
    fn section_four_values() {
        assert_eq!(f_s(6, 3, 1).value, 205);
        assert_eq!(f_s(9, 4, 2).value, 534);
        assert_eq!(g_t(9, 5, 1).value, 564);
        assert!(f_s(9, 4, 1).valid);
        // s = 2 is outside 2s <= p - 1 at p = 4
        assert!(!f_s(9, 4, 2).valid);
        assert_eq!(f_s(15, 7, 2).value, 1740);
        assert_eq!(g_t(15, 8, 1).value, 1734);
    }

    #[test]
    fn displayed_special_cases_agree() {
        for n in 6..40 {
            for p in 3..=n / 2 {
                assert_eq!(f_s(n, p, 1).value, eds_t1(n, p).value);
                assert_eq!(f_s(n, p, 2).value, eds_t2(n, p).value);
                assert_eq!(g_t(n, n - p, 1).value, eds_t1_prime(n, n - p).value);
                // printed T_1 - T'_1 difference
                assert_eq!(eds_t1(n, p).value - eds_t1_prime(n, n - p).value, 2 * (n + 6) * (2 * p - n));
                assert_eq!(
                    g_t(n, n - p, 1).value - f_s(n, p, 2).value,
                    threshold_rederived(n, p)
                );
            }
        }
    }

    #[test]
    fn f_and_g_increase_on_their_ranges() {
        for p in 3..20 {
            let n = 2 * p + 3;
            for s in 1..(p - 1) / 2 {
                assert!(f_s(n, p, s + 1).value > f_s(n, p, s).value);
                assert!(g_t(n, p, s + 1).value > g_t(n, p, s).value);
            }
        }
    }

    #[test]
    fn double_star_and_star() {
        assert_eq!(eds_double_star(3, 4).unwrap(), 235);
        assert_eq!(eds_double_star(2, 2).unwrap(), 52);
        assert_eq!(eds_double_star(3, 3).unwrap(), 160);
        assert!(eds_double_star(1, 3).is_err());
        assert_eq!(eds_star(4).unwrap(), 33);
        assert_eq!(eds_star(1).unwrap(), 0);
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold_rederived(9, 4), 30);
        assert_eq!(threshold_rederived(15, 7), -6);
        assert_eq!(threshold_paper(15, 7), 64);
        assert_eq!(third_min_winner(9, 4, Variant::Rederived).unwrap(), Winner::T2);
        assert_eq!(third_min_winner(15, 7, Variant::Rederived).unwrap(), Winner::T1Prime);
        assert_eq!(third_min_winner(15, 7, Variant::Paper).unwrap(), Winner::T2);
        assert!(third_min_winner(8, 4, Variant::Paper).is_err());
        assert!(third_min_winner(7, 3, Variant::Paper).is_err());
    }

    #[test]
    fn path_bound() {
        assert_eq!(total_ecc_path_bound(4, 2).unwrap(), 7);
        assert_eq!(total_ecc_path_bound(4, 3).unwrap(), 10);
        assert_eq!(total_ecc_path_bound(7, 6).unwrap(), 33);
        assert!(total_ecc_path_bound(4, 4).is_err());
        assert!(total_ecc_path_bound(4, 1).is_err());
    }

    #[test]
    fn ids_roundtrip_and_arity() {
        for id in FormulaId::ALL {
            assert_eq!(id.name().parse::<FormulaId>().unwrap(), id);
            assert!(id.evaluate(&[1]).is_err() || id.params().len() == 1);
        }
        assert_eq!(FormulaId::FS.evaluate(&[6, 3, 1]).unwrap().value, 205);
        assert!("f0".parse::<FormulaId>().is_err());
    }
}
