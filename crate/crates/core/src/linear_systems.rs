//! Linear systems of plane curves of degree `e` with virtual multiplicities
//! along a cluster, and the filters that decide whether such a system cuts
//! out a fiber component.

use crate::cluster::{Cluster, PointOrigin};
use crate::enumerator::Candidate;
use crate::error::Error;
use crate::field::{rank_and_kernel, Field, FieldElement, KMatrix, Matrix, NumberField};
use crate::poly::{LinCoeffPoly, LinearForm, Monomial, MultiPoly};

/// Linear conditions on the coefficients of a generic form of degree `e`.
/// Unknown `i` is the coefficient of the `i`-th monomial of degree `e` in
/// descending graded lex order.
#[derive(Clone, Debug)]
pub struct ConditionSystem {
    pub e: u32,
    pub unknown_count: usize,
    pub conditions: KMatrix,
    pub field: NumberField,
}

impl ConditionSystem {
    pub fn rank(&self) -> usize {
        rank_and_kernel(&self.field, &self.conditions).0
    }
}

/// Builds the conditions for multiplicity at least `v_p` at every point of
/// the cluster, transporting the generic form with drops equal to `v`.
pub fn impose_cluster_conditions(e: u32, candidate: &Candidate, cluster: &Cluster) -> ConditionSystem {
    let k = cluster.field();
    let generic = LinCoeffPoly::generic_form(k, e);
    let n = generic.unknown_count();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for root in cluster.roots() {
        let local = cluster.localize_proper(root, &generic);
        collect(cluster, root, local, &candidate.v, &mut rows);
    }
    ConditionSystem { e, unknown_count: n, conditions: Matrix::from_rows(n, rows), field: k.clone() }
}

fn collect(
    cluster: &Cluster,
    id: usize,
    local: LinCoeffPoly,
    v: &[u32],
    rows: &mut Vec<Vec<FieldElement>>,
) {
    let k = cluster.field();
    let vp = v[id];
    if vp == 0 {
        // proximity forces v = 0 on the whole subtree
        return;
    }
    let push = |rows: &mut Vec<_>, f: LinearForm| {
        if !f.0.iter().all(|c| k.is_zero(c)) {
            rows.push(f.0);
        }
    };
    for f in local.low_order_conditions(vp) {
        push(rows, f);
    }
    for &child in cluster.children(id) {
        let PointOrigin::InfinitelyNear { chart, center } = &cluster.points()[child].origin else {
            unreachable!();
        };
        let (next, discarded) = local.virtual_transform(*chart, center, vp);
        for f in discarded {
            push(rows, f);
        }
        collect(cluster, child, next, v, rows);
    }
}

/// `unknown_count − rank − 1`; `−1` means the system is empty.
pub fn projective_dimension(sys: &ConditionSystem) -> i64 {
    sys.unknown_count as i64 - sys.rank() as i64 - 1
}

/// The unique curve of a system of projective dimension 0, canonically scaled.
pub fn unique_member(sys: &ConditionSystem) -> Result<MultiPoly, Error> {
    let k = &sys.field;
    let (rank, kernel) = rank_and_kernel(k, &sys.conditions);
    let dim = sys.unknown_count as i64 - rank as i64 - 1;
    if dim != 0 {
        return Err(Error::DimensionNotZero(dim));
    }
    let monos = Monomial::all_of_degree(sys.e, 3);
    let form = MultiPoly::from_terms(k, 3, monos.into_iter().zip(kernel[0].iter().cloned()));
    form.canonical_form()
}

/// Whether the system's divisor on the blown-up surface has exceptional
/// components, i.e. the actual multiplicities of `c` differ from `v`.
pub fn has_exceptional_part(c: &MultiPoly, candidate: &Candidate, cluster: &Cluster) -> Result<bool, Error> {
    Ok(cluster.curve_multiplicities(c)? != candidate.v)
}

/// Whether `q` divides `c`.
pub fn is_component(q: &MultiPoly, c: &MultiPoly) -> bool {
    c.divide_exact(q).is_some()
}
