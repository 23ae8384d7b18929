//! The classical S-function series and their truncated Schur expansions.
//!
//! `L, M, P, Q, A, B, C, D, V, W` have closed Schur contents; the
//! remaining six are products of those: `E = LA`, `F = MB`, `G = QA`,
//! `H = PB`, `R = LP`, `S = MQ`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::outer_hopf::outer_product;
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::{rat, Basis, Cap, Rational, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeriesId {
    L,
    M,
    P,
    Q,
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    R,
    S,
    V,
    W,
}

impl SeriesId {
    pub const ALL: [SeriesId; 16] = [
        SeriesId::L,
        SeriesId::M,
        SeriesId::P,
        SeriesId::Q,
        SeriesId::A,
        SeriesId::B,
        SeriesId::C,
        SeriesId::D,
        SeriesId::E,
        SeriesId::F,
        SeriesId::G,
        SeriesId::H,
        SeriesId::R,
        SeriesId::S,
        SeriesId::V,
        SeriesId::W,
    ];

    /// The eight series with closed contents in the classical table.
    pub const PRIMARY: [SeriesId; 8] = [
        SeriesId::L,
        SeriesId::M,
        SeriesId::P,
        SeriesId::Q,
        SeriesId::A,
        SeriesId::B,
        SeriesId::C,
        SeriesId::D,
    ];

    pub const GROUP_LIKE: [SeriesId; 8] = [
        SeriesId::L,
        SeriesId::M,
        SeriesId::P,
        SeriesId::Q,
        SeriesId::R,
        SeriesId::S,
        SeriesId::V,
        SeriesId::W,
    ];

    pub const GENERIC: [SeriesId; 8] = [
        SeriesId::A,
        SeriesId::B,
        SeriesId::C,
        SeriesId::D,
        SeriesId::E,
        SeriesId::F,
        SeriesId::G,
        SeriesId::H,
    ];

    /// The series `X⁻¹`.
    pub fn inverse(self) -> SeriesId {
        use SeriesId::*;
        match self {
            L => M,
            M => L,
            P => Q,
            Q => P,
            A => B,
            B => A,
            C => D,
            D => C,
            E => F,
            F => E,
            G => H,
            H => G,
            R => S,
            S => R,
            V => W,
            W => V,
        }
    }

    /// Whether the characteristic cochain is an algebra homomorphism.
    pub fn is_group_like(self) -> bool {
        Self::GROUP_LIKE.contains(&self)
    }

    /// `(X, Y)` with `self = X·Y`, for the series defined as products.
    pub fn factors(self) -> Option<(SeriesId, SeriesId)> {
        use SeriesId::*;
        match self {
            E => Some((L, A)),
            F => Some((M, B)),
            G => Some((Q, A)),
            H => Some((P, B)),
            R => Some((L, P)),
            S => Some((M, Q)),
            _ => None,
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeriesId> {
        SeriesId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Domain(format!("unknown series `{s}`")))
    }
}

fn all_even(parts: &[usize]) -> bool {
    parts.iter().all(|p| p % 2 == 0)
}

fn even_weight_sign(lambda: &Partition) -> i64 {
    if (lambda.weight() / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Coefficient of `s_λ` from the closed content of a series; `None` for
/// the product-defined series.
pub fn closed_form_coefficient(id: SeriesId, lambda: &Partition) -> Option<i64> {
    use SeriesId::*;
    let parts = lambda.parts();
    let is_row = parts.len() <= 1;
    let is_column = parts.iter().all(|&p| p == 1);
    let odd = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
    let c = match id {
        L => {
            if is_column {
                odd(lambda.weight())
            } else {
                0
            }
        }
        M => i64::from(is_row),
        P => {
            if is_row {
                odd(lambda.weight())
            } else {
                0
            }
        }
        Q => i64::from(is_column),
        A | C => {
            // A: Frobenius (a_1..a_r | a_1+1..a_r+1); C: (a_1+1..a_r+1 | a_1..a_r)
            let frob = lambda.to_frobenius();
            let (short, long) = if id == A {
                (&frob.arms, &frob.legs)
            } else {
                (&frob.legs, &frob.arms)
            };
            if short.iter().zip(long.iter()).all(|(a, b)| a + 1 == *b) {
                even_weight_sign(lambda)
            } else {
                0
            }
        }
        D => i64::from(all_even(parts)),
        B => i64::from(all_even(lambda.conjugate().parts())),
        W => {
            // (p + 2q, p)
            if parts.len() <= 2 && (lambda.part(0) - lambda.part(1)).is_multiple_of(2) {
                odd(lambda.part(1))
            } else {
                0
            }
        }
        V => {
            let conj = lambda.conjugate();
            if conj.len() <= 2 && (conj.part(0) - conj.part(1)).is_multiple_of(2) {
                odd(conj.part(1))
            } else {
                0
            }
        }
        E | F | G | H | R | S => return None,
    };
    Some(c)
}

/// A series expanded in the Schur basis through weight `cap`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub id: SeriesId,
    pub cap: usize,
    pub expansion: SymFunc,
}

fn series_cache() -> &'static Memo<(SeriesId, usize), TruncatedSeries> {
    static CACHE: OnceLock<Memo<(SeriesId, usize), TruncatedSeries>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// The Schur expansion of a series through weight `cap`.
pub fn series(id: SeriesId, cap: usize) -> TruncatedSeries {
    (*series_cache().get_or_compute(&(id, cap), || {
        let expansion = match id.factors() {
            Some((x, y)) => series_product(&series(x, cap).expansion, &series(y, cap).expansion),
            None => SymFunc::from_terms(
                Basis::Schur,
                partitions_up_to(cap).into_iter().filter_map(|lambda| {
                    let c = closed_form_coefficient(id, &lambda).expect("closed form");
                    (c != 0).then(|| (lambda, rat(c)))
                }),
            )
            .with_cap(Cap::Capped(cap)),
        };
        TruncatedSeries { id, cap, expansion }
    }))
    .clone()
}

/// Outer product truncated at the smaller of the two caps.
pub fn series_product(a: &SymFunc, b: &SymFunc) -> SymFunc {
    outer_product(a, b)
}

/// Exact coefficient of `s_λ` in the (untruncated) series.
pub fn series_coefficient(id: SeriesId, lambda: &Partition) -> Rational {
    match closed_form_coefficient(id, lambda) {
        Some(c) => rat(c),
        None => series(id, lambda.weight()).expansion.coeff(lambda),
    }
}

/// `φ(s_λ)` = signed coefficient of `s_λ` in the series, zero above `cap`.
pub fn characteristic_cochain(id: SeriesId, cap: usize) -> Cochain {
    Cochain::series_capped(id, cap)
}

impl TruncatedSeries {
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        if lambda.weight() > self.cap {
            Rational::zero()
        } else {
            self.expansion.coeff(lambda)
        }
    }
}
