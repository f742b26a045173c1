//! Explicit certificates for `HDE(P_0^2 P_{t+2}^t; P_t) = t + 2`: the
//! uniform point `p*` bounds the program from above, and the folding
//! homomorphism `ψ` attains `t + 2` at every point of the polytope.

use num_traits::Zero;

use super::{CliqueData, ObjectiveForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{enumerate_homs, Homomorphism};
use crate::polymatroid::{is_member, p_star, random_vertex_point, SetFunction};
use crate::rational::{int, Rational};

/// `P_0^2 P_{t+2}^t`: two isolated vertices followed by `t` paths with
/// `t + 2` edges.
/// Fails with `GraphTooLarge` for `t >= 7`.
pub fn flagship_source(t: usize) -> Result<Graph> {
    if t + 2 >= crate::graph::MAX_VERTICES {
        return Err(Error::GraphTooLarge(2 + t * (t + 3)));
    }
    Graph::disjoint_union(&[(Graph::path(0), 2), (Graph::path(t + 2), t)])
}

fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::BadIndex {
            index: 0,
            max: usize::MAX,
        })
    } else {
        Ok(())
    }
}

/// The fold of `P_{t+2}` onto `P_t` that traverses edge `{i, i+1}` (1-based)
/// three times and every other edge once. In 0-based labels, vertex `v`
/// maps to `v` for `v <= i` and to `v - 2` beyond.
pub fn phi_i(t: usize, i: usize) -> Result<Homomorphism> {
    if i == 0 || i > t {
        return Err(Error::BadIndex { index: i, max: t });
    }
    let map = (0..t + 3).map(|v| if v <= i { v } else { v - 2 }).collect();
    Homomorphism::new(&Graph::path(t + 2), &Graph::path(t), map)
}

/// Sends the two isolated vertices to the ends of `P_t` and the `i`-th path
/// copy through `phi_i(t, i)`.
pub fn psi(t: usize) -> Result<Homomorphism> {
    check_t(t)?;
    let mut map = vec![0, t];
    for i in 1..=t {
        map.extend(phi_i(t, i)?.map);
    }
    Homomorphism::new(&flagship_source(t)?, &Graph::path(t), map)
}

/// Maximum over all homomorphisms of the subset-form objective at `p*`,
/// taken component by component.
pub fn certify_upper(t: usize) -> Result<Rational> {
    check_t(t)?;
    let target = Graph::path(t);
    let p = p_star(t)?;
    let mut total = Rational::zero();
    for (component, mult) in flagship_source(t)?.component_multiset() {
        let data = CliqueData::new(&component, ObjectiveForm::Subset)?;
        let best = enumerate_homs(&component, &target)
            .map(|phi| data.profile(&phi).evaluate(&p))
            .max()
            .ok_or(Error::NoHomomorphism(0))?;
        total += best * int(mult as i64);
    }
    Ok(total)
}

/// [`certify_lower`] at `batch` random polytope vertices seeded
/// `seed, seed + 1, ...`, in seed order.
pub fn certify_lower_batch(t: usize, batch: usize, seed: u64) -> Result<Vec<Rational>> {
    use rayon::prelude::*;
    check_t(t)?;
    let target = Graph::path(t);
    (0..batch as u64)
        .into_par_iter()
        .map(|i| certify_lower(t, &random_vertex_point(&target, seed + i)?))
        .collect()
}

/// Subset-form objective of `ψ` at a member `p` of the polytope of `P_t`.
pub fn certify_lower(t: usize, p: &SetFunction) -> Result<Rational> {
    check_t(t)?;
    let target = Graph::path(t);
    if !is_member(p, &target)?.is_member() {
        return Err(Error::NotMember);
    }
    let source = flagship_source(t)?;
    let data = CliqueData::new(&source, ObjectiveForm::Subset)?;
    Ok(data.profile(&psi(t)?).evaluate(p))
}
