//! Clusters of proper and infinitely near points of the plane.
//!
//! Every point carries a local coordinate frame. A proper point is read in
//! the first standard affine chart (`Z`, then `Y`, then `X`) where it is
//! finite and translated to the origin. A point on the exceptional line of
//! its parent is reached by one blow-up chart ([`BlowupChart`]): after the
//! substitution the parent's exceptional line is always `x = 0`, and an
//! older exceptional line through the point, if any, is `y = 0`. That older
//! line is what makes a point satellite (proximate to two points).

use crate::error::Error;
use crate::field::{Field, FieldElement, NumberField};
use crate::poly::{AffineChart, BlowupChart, Coefficient, MultiPoly, SparsePoly};

/// How a point is reached from its parent (or from the plane).
#[derive(Clone, Debug, PartialEq)]
pub enum PointOrigin {
    /// A point of P² with homogeneous coordinates normalized so that the
    /// coordinate fixed by `chart` equals 1.
    Proper { coords: [FieldElement; 3], chart: AffineChart },
    /// A point on the exceptional line of the parent.
    InfinitelyNear { chart: BlowupChart, center: FieldElement },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClusterPoint {
    pub id: usize,
    pub level: usize,
    pub parent: Option<usize>,
    pub origin: PointOrigin,
    /// Points whose exceptional line (strict transform) passes through this one.
    pub proximate_to: Vec<usize>,
    /// Multiplicity of a generic member of the pencil at this point.
    pub generic_mult: u32,
}

/// Which exceptional lines pass through a point, as local axes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LocalExceptional {
    /// Owner of the exceptional line `x = 0`.
    pub x_axis: Option<usize>,
    /// Owner of the exceptional line `y = 0`.
    pub y_axis: Option<usize>,
}

/// One blow-up step of a frame: blow up the point `blown_up` and move to the
/// point of its exceptional line given by `chart` and `center`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameStep {
    pub blown_up: usize,
    pub chart: BlowupChart,
    pub center: FieldElement,
}

/// The substitution chain from the plane down to a point.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub root: usize,
    pub chart: AffineChart,
    pub shift: [FieldElement; 2],
    pub steps: Vec<FrameStep>,
}

/// Proximity set of a new point on the exceptional line of `parent`, and the
/// exceptional configuration at the new point.
pub fn satellite_detect(
    k: &NumberField,
    parent: usize,
    parent_exc: &LocalExceptional,
    chart: BlowupChart,
    center: &FieldElement,
) -> (Vec<usize>, LocalExceptional) {
    let second = match chart {
        BlowupChart::Finite if k.is_zero(center) => parent_exc.y_axis,
        BlowupChart::Finite => None,
        BlowupChart::Infinite => parent_exc.x_axis,
    };
    let mut prox = vec![parent];
    prox.extend(second);
    prox.sort_unstable();
    (prox, LocalExceptional { x_axis: Some(parent), y_axis: second })
}

/// A finite tree of points, parents before children.
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    field: NumberField,
    points: Vec<ClusterPoint>,
    children: Vec<Vec<usize>>,
}

impl Cluster {
    /// Builds a cluster; ids must equal positions and parents must precede
    /// children.
    pub fn new(field: &NumberField, points: Vec<ClusterPoint>) -> Result<Self, Error> {
        let mut children = vec![Vec::new(); points.len()];
        for (i, p) in points.iter().enumerate() {
            if p.id != i {
                return Err(Error::Invariant(format!("point at position {i} has id {}", p.id)));
            }
            match p.parent {
                None => {
                    if p.level != 0 || !matches!(p.origin, PointOrigin::Proper { .. }) {
                        return Err(Error::Invariant(format!("root point {i} must be proper at level 0")));
                    }
                }
                Some(par) => {
                    if par >= i {
                        return Err(Error::Invariant(format!("point {i} precedes its parent {par}")));
                    }
                    if points[par].level + 1 != p.level {
                        return Err(Error::Invariant(format!("point {i} has inconsistent level")));
                    }
                    if !p.proximate_to.contains(&par) || p.proximate_to.len() > 2 {
                        return Err(Error::Invariant(format!("point {i} has invalid proximities")));
                    }
                    children[par].push(i);
                }
            }
        }
        Ok(Cluster { field: field.clone(), points, children })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn points(&self) -> &[ClusterPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, id: usize) -> Result<&ClusterPoint, Error> {
        self.points.get(id).ok_or(Error::UnknownPoint(id))
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().filter(|p| p.parent.is_none()).map(|p| p.id)
    }

    /// Points proximate to `id`.
    pub fn proximate_points(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.points
            .iter()
            .filter(move |q| q.proximate_to.contains(&id))
            .map(|q| q.id)
    }

    pub fn generic_mults(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.generic_mult).collect()
    }

    /// The ancestors of a point, from its level-0 root down to itself.
    pub fn chain(&self, id: usize) -> Result<Vec<usize>, Error> {
        let mut chain = vec![self.get(id)?.id];
        let mut cur = id;
        while let Some(p) = self.points[cur].parent {
            chain.push(p);
            cur = p;
        }
        chain.reverse();
        Ok(chain)
    }

    /// The substitution chain carrying a polynomial in `X, Y, Z` to local
    /// coordinates centered at the point.
    pub fn frame_to(&self, id: usize) -> Result<Frame, Error> {
        let chain = self.chain(id)?;
        let root = chain[0];
        let PointOrigin::Proper { coords, chart } = &self.points[root].origin else {
            unreachable!("roots are proper");
        };
        let [i, j] = chart.free_indices();
        let shift = [coords[i].clone(), coords[j].clone()];
        let steps = chain
            .windows(2)
            .map(|w| {
                let PointOrigin::InfinitelyNear { chart, center } = &self.points[w[1]].origin else {
                    unreachable!("non-roots are infinitely near");
                };
                FrameStep { blown_up: w[0], chart: *chart, center: center.clone() }
            })
            .collect();
        Ok(Frame { root, chart: *chart, shift, steps })
    }

    /// Moves a form in `X, Y, Z` to the local chart of a proper point, with
    /// that point at the origin.
    pub fn localize_proper<C: Coefficient>(&self, root: usize, form: &SparsePoly<C>) -> SparsePoly<C> {
        let PointOrigin::Proper { coords, chart } = &self.points[root].origin else {
            panic!("point {root} is not proper");
        };
        let [i, j] = chart.free_indices();
        form.dehomogenize(*chart).translate(&[coords[i].clone(), coords[j].clone()])
    }

    /// Actual multiplicities of the strict transforms of the curve `form = 0`
    /// at every point of the cluster (index = point id).
    pub fn curve_multiplicities(&self, form: &MultiPoly) -> Result<Vec<u32>, Error> {
        let mut mults = vec![0u32; self.points.len()];
        for root in self.roots() {
            let local = self.localize_proper(root, form);
            self.descend_actual(root, local, &mut mults)?;
        }
        Ok(mults)
    }

    fn descend_actual(&self, id: usize, local: MultiPoly, mults: &mut [u32]) -> Result<(), Error> {
        let m = local.multiplicity_at_origin()?;
        mults[id] = m;
        for &child in &self.children[id] {
            let PointOrigin::InfinitelyNear { chart, center } = &self.points[child].origin else {
                unreachable!();
            };
            let next = local.blowup_transform(*chart, center, m)?;
            self.descend_actual(child, next, mults)?;
        }
        Ok(())
    }

    /// Checks the proximity inequalities `v_p ≥ Σ_{q → p} v_q` for a vector indexed by point id.
    pub fn satisfies_proximity(&self, v: &[u32]) -> bool {
        (0..self.points.len()).all(|p| {
            let s: u32 = self.proximate_points(p).map(|q| v[q]).sum();
            v[p] >= s
        })
    }

    /// Structural invariants plus `Σ m_p² = d²` and the proximity inequalities
    /// for the generic multiplicities.
    pub fn check_invariants(&self, d: u32) -> Result<(), Error> {
        let mults = self.generic_mults();
        if !self.satisfies_proximity(&mults) {
            return Err(Error::Invariant("generic multiplicities violate proximity".into()));
        }
        let s: u64 = mults.iter().map(|&m| (m as u64) * (m as u64)).sum();
        if s != (d as u64) * (d as u64) {
            return Err(Error::Invariant(format!("sum of squared multiplicities {s} != d^2 = {}", d * d)));
        }
        if mults.contains(&0) {
            return Err(Error::Invariant("base point with multiplicity 0".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_and_satellite_proximities() {
        let k = NumberField::rationals();
        let root = LocalExceptional::default();
        let (prox, exc1) = satellite_detect(&k, 0, &root, BlowupChart::Finite, &k.from_int(3));
        assert_eq!(prox, vec![0]);
        assert_eq!(exc1, LocalExceptional { x_axis: Some(0), y_axis: None });
        // corner of the two charts at the next level
        let (prox, exc2) = satellite_detect(&k, 1, &exc1, BlowupChart::Infinite, &k.zero());
        assert_eq!(prox, vec![0, 1]);
        assert_eq!(exc2, LocalExceptional { x_axis: Some(1), y_axis: Some(0) });
        // slope 0 keeps following the old line y = 0
        let (prox, _) = satellite_detect(&k, 2, &exc2, BlowupChart::Finite, &k.zero());
        assert_eq!(prox, vec![0, 2]);
        let (prox, _) = satellite_detect(&k, 2, &exc2, BlowupChart::Finite, &k.one());
        assert_eq!(prox, vec![2]);
    }
}
