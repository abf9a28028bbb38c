use num_rational::BigRational;
use num_traits::Zero;

use super::instance::{EdgeClass, EdgeId, Instance, VertexId};
use super::orientation::{Orientation, OrientationError};

/// Strong-envy certificate: `envier` prefers `envied`'s bundle without `dropped`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub envier: VertexId,
    pub envied: VertexId,
    pub dropped: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub witnesses: Vec<Witness>,
}

impl VerifyReport {
    fn from_witnesses(mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort_unstable();
        VerifyReport { ok: witnesses.is_empty(), witnesses }
    }
}

/// EFX check for symmetric additive values.
///
/// Agent `i` only values edges at `i`, so `i` can strongly envy `j` only
/// through the edge `ij` directed to `j` while `j` holds some other item.
/// Binary instances use the 1-item test directly.
pub fn verify_efx(inst: &Instance, o: &Orientation) -> Result<VerifyReport, OrientationError> {
    o.check(inst)?;
    let bundles = o.bundles(inst.n());
    let mut witnesses = Vec::new();
    if inst.is_binary() {
        let has_one: Vec<bool> = bundles
            .iter()
            .map(|b| b.iter().any(|&e| inst.is_one(e)))
            .collect();
        for (e, edge) in inst.edges().iter().enumerate() {
            if !inst.is_one(e) {
                continue;
            }
            let j = o.receiver(e);
            let i = edge.other(j);
            if !has_one[i] && bundles[j].len() >= 2 {
                witnesses.push(Witness { envier: i, envied: j, dropped: first_other(&bundles[j], e) });
            }
        }
    } else {
        let own: Vec<BigRational> = bundles
            .iter()
            .map(|b| b.iter().fold(BigRational::zero(), |acc, &e| acc + inst.edge(e).value.as_rational()))
            .collect();
        for (e, edge) in inst.edges().iter().enumerate() {
            if inst.class(e) == EdgeClass::Zero {
                continue;
            }
            let j = o.receiver(e);
            let i = edge.other(j);
            if bundles[j].len() >= 2 && edge.value.as_rational() > &own[i] {
                witnesses.push(Witness { envier: i, envied: j, dropped: first_other(&bundles[j], e) });
            }
        }
    }
    Ok(VerifyReport::from_witnesses(witnesses))
}

fn first_other(bundle: &[EdgeId], e: EdgeId) -> EdgeId {
    *bundle.iter().find(|&&g| g != e).expect("bundle holds a second item")
}

/// Literal definition: for every ordered pair and every dropped item, compare
/// additive values. Quadratic in `n`; intended for cross-checking.
pub fn verify_efx_definitional(inst: &Instance, o: &Orientation) -> Result<VerifyReport, OrientationError> {
    o.check(inst)?;
    let bundles = o.bundles(inst.n());
    let value_for = |i: VertexId, items: &mut dyn Iterator<Item = EdgeId>| -> BigRational {
        items
            .filter(|&g| inst.edge(g).touches(i))
            .fold(BigRational::zero(), |acc, g| acc + inst.edge(g).value.as_rational())
    };
    let mut witnesses = Vec::new();
    for i in 0..inst.n() {
        let own = value_for(i, &mut bundles[i].iter().copied());
        for j in 0..inst.n() {
            if i == j {
                continue;
            }
            for &g in &bundles[j] {
                let rest = value_for(i, &mut bundles[j].iter().copied().filter(|&x| x != g));
                if rest > own {
                    witnesses.push(Witness { envier: i, envied: j, dropped: g });
                    break;
                }
            }
        }
    }
    Ok(VerifyReport::from_witnesses(witnesses))
}
