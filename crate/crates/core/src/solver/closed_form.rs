//! Known closed-form values of the majority domination parameters, evaluated
//! in exact integer arithmetic.

use std::fmt;

use serde::Serialize;

use crate::error::{ModfError, Result};
use crate::families::FamilySpec;

/// Which parameter a prediction is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `γ+maj(D)` of a digraph.
    GammaOut,
    /// `dom+maj(G)`: minimum `γ+maj` over orientations.
    DomMin,
    /// `DOM+maj(G)`: maximum `γ+maj` over orientations.
    DomMax,
    /// `γmaj(G)` of an undirected graph.
    GammaMaj,
}

impl Quantity {
    pub fn symbol(self) -> &'static str {
        match self {
            Quantity::GammaOut => "gamma+maj",
            Quantity::DomMin => "dom+maj",
            Quantity::DomMax => "DOM+maj",
            Quantity::GammaMaj => "gamma_maj",
        }
    }
}

/// A predicted value, or a one-sided bound where only that is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Prediction {
    Exact(i64),
    AtMost(i64),
    AtLeast(i64),
}

impl Prediction {
    pub fn admits(self, value: i64) -> bool {
        match self {
            Prediction::Exact(p) => value == p,
            Prediction::AtMost(p) => value <= p,
            Prediction::AtLeast(p) => value >= p,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact(p) => write!(f, "{p}"),
            Prediction::AtMost(p) => write!(f, "<= {p}"),
            Prediction::AtLeast(p) => write!(f, ">= {p}"),
        }
    }
}

/// The result a prediction instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    DirectedCycle,
    DirectedPath,
    TransitiveTournament,
    Figure1,
    Figure2,
    PathDomMin,
    PathDomMax,
    CycleDomMin,
    CycleDomMax,
    StarDomMin,
    StarDomMax,
    DoubleStarDomMax,
    DoubleStarDomMinLarge,
    DoubleStarDomMinSmall,
    BipartiteDomMin,
    /// Open conjecture, not a theorem.
    BipartiteDomMaxConjecture,
    PathGammaMaj,
    CycleGammaMaj,
    StarGammaMaj,
    DoubleStarGammaMaj,
}

impl FormulaId {
    pub fn expression(self) -> &'static str {
        match self {
            FormulaId::DirectedCycle | FormulaId::CycleDomMax => "2 (n even), 3 (n odd)",
            FormulaId::DirectedPath
            | FormulaId::PathDomMax
            | FormulaId::StarDomMax
            | FormulaId::DoubleStarDomMax
            | FormulaId::DoubleStarGammaMaj => "0 (n even), 1 (n odd)",
            FormulaId::TransitiveTournament | FormulaId::PathDomMin | FormulaId::CycleDomMin => {
                "-n + 2*ceil((n+2)/4)"
            }
            FormulaId::Figure1 => "1",
            FormulaId::Figure2 => "<= -2k",
            FormulaId::StarDomMin | FormulaId::DoubleStarDomMinSmall => {
                "-2 (n even), -1 (n odd)"
            }
            FormulaId::DoubleStarDomMinLarge => "-4 (n even), -3 (n odd)",
            FormulaId::BipartiteDomMin => "4 - n",
            FormulaId::BipartiteDomMaxConjecture => "2 (r+s even), 3 (r+s odd)",
            FormulaId::PathGammaMaj | FormulaId::CycleGammaMaj => {
                "-2*ceil((n-4)/6) (n even), 1 - 2*ceil((n-3)/6) (n odd)"
            }
            FormulaId::StarGammaMaj => "1 (n even), 2 (n odd)",
        }
    }

    pub fn is_conjecture(self) -> bool {
        self == FormulaId::BipartiteDomMaxConjecture
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedFormPrediction {
    pub family: FamilySpec,
    pub quantity: Quantity,
    pub predicted: Prediction,
    pub formula: FormulaId,
}

/// `ceil(a / b)` for `b > 0`, correct for negative `a`.
fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

fn by_parity(n: i64, even: i64, odd: i64) -> i64 {
    if n % 2 == 0 {
        even
    } else {
        odd
    }
}

fn tournament_value(n: i64) -> i64 {
    -n + 2 * ceil_div(n + 2, 4)
}

fn path_cycle_gamma_maj(n: i64) -> i64 {
    if n % 2 == 0 {
        -2 * ceil_div(n - 4, 6)
    } else {
        1 - 2 * ceil_div(n - 3, 6)
    }
}

/// The known value of `quantity` on `family`.
pub fn closed_form(family: &FamilySpec, quantity: Quantity) -> Result<ClosedFormPrediction> {
    family.build()?;
    let n = family.order() as i64;
    let unknown = || {
        Err(ModfError::NoClosedForm(format!(
            "{} of {}",
            quantity.symbol(),
            family
        )))
    };
    use FamilySpec as F;
    use FormulaId as Id;
    use Quantity as Q;
    let (predicted, formula) = match (*family, quantity) {
        (F::DirectedCycle { .. }, Q::GammaOut) => (Prediction::Exact(by_parity(n, 2, 3)), Id::DirectedCycle),
        (F::DirectedPath { .. }, Q::GammaOut) => (Prediction::Exact(by_parity(n, 0, 1)), Id::DirectedPath),
        (F::TransitiveTournament { .. }, Q::GammaOut) => {
            (Prediction::Exact(tournament_value(n)), Id::TransitiveTournament)
        }
        (F::Figure1, Q::GammaOut) => (Prediction::Exact(1), Id::Figure1),
        (F::Figure2 { k }, Q::GammaOut) => (Prediction::AtMost(-2 * k as i64), Id::Figure2),

        (F::PathGraph { .. }, Q::DomMin) => (Prediction::Exact(tournament_value(n)), Id::PathDomMin),
        (F::PathGraph { .. }, Q::DomMax) => (Prediction::Exact(by_parity(n, 0, 1)), Id::PathDomMax),
        (F::CycleGraph { .. }, Q::DomMin) => (Prediction::Exact(tournament_value(n)), Id::CycleDomMin),
        (F::CycleGraph { .. }, Q::DomMax) => (Prediction::Exact(by_parity(n, 2, 3)), Id::CycleDomMax),
        (F::StarGraph { .. }, Q::DomMin) if n >= 5 => {
            (Prediction::Exact(by_parity(n, -2, -1)), Id::StarDomMin)
        }
        (F::StarGraph { .. }, Q::DomMax) => (Prediction::Exact(by_parity(n, 0, 1)), Id::StarDomMax),
        (F::DoubleStarGraph { .. }, Q::DomMax) => {
            (Prediction::Exact(by_parity(n, 0, 1)), Id::DoubleStarDomMax)
        }
        (F::DoubleStarGraph { a, b }, Q::DomMin) if n >= 13 && a >= 2 && b >= 2 => {
            (Prediction::Exact(by_parity(n, -4, -3)), Id::DoubleStarDomMinLarge)
        }
        (F::DoubleStarGraph { .. }, Q::DomMin) if n >= 5 => {
            (Prediction::Exact(by_parity(n, -2, -1)), Id::DoubleStarDomMinSmall)
        }
        (F::CompleteBipartiteGraph { r, s }, Q::DomMin) if r >= 2 && s >= 2 => {
            (Prediction::Exact(4 - n), Id::BipartiteDomMin)
        }
        (F::CompleteBipartiteGraph { r, s }, Q::DomMax) if r >= 2 && s >= 2 => {
            (Prediction::Exact(by_parity(n, 2, 3)), Id::BipartiteDomMaxConjecture)
        }

        (F::PathGraph { .. }, Q::GammaMaj) if n >= 2 => {
            (Prediction::Exact(path_cycle_gamma_maj(n)), Id::PathGammaMaj)
        }
        (F::CycleGraph { .. }, Q::GammaMaj) => {
            (Prediction::Exact(path_cycle_gamma_maj(n)), Id::CycleGammaMaj)
        }
        (F::StarGraph { .. }, Q::GammaMaj) => (Prediction::Exact(by_parity(n, 1, 2)), Id::StarGammaMaj),
        (F::DoubleStarGraph { .. }, Q::GammaMaj) => {
            (Prediction::Exact(by_parity(n, 0, 1)), Id::DoubleStarGammaMaj)
        }
        _ => return unknown(),
    };
    Ok(ClosedFormPrediction {
        family: *family,
        quantity,
        predicted,
        formula,
    })
}
