//! Wreath products `G ≀ S_n = G^n ⋊ S_n` for cyclic `G`.
//!
//! In dimension at least three the braid group of a space is the wreath
//! product of its fundamental group with the symmetric group, so for the
//! cyclic groups that occur here the braid group is fully described by the
//! base order and the number of copies.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{AbelianizationResult, PresentationError};
use crate::braid::Permutation;

/// A cyclic base group: `ℤ/ν` (with `ν = 1` the trivial group) or `ℤ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseGroup {
    Cyclic(u64),
    InfiniteCyclic,
}

impl BaseGroup {
    /// Reads a cyclic group off an abelianization summary.
    ///
    /// The summary is taken to describe the fundamental group itself, which
    /// is correct only when that group is abelian; anything non-cyclic is
    /// rejected.
    pub fn from_abelianization(a: &AbelianizationResult) -> Result<Self, PresentationError> {
        match (a.free_rank, a.torsion_coefficients.as_slice()) {
            (0, []) => Ok(BaseGroup::Cyclic(1)),
            (0, [nu]) => Ok(BaseGroup::Cyclic(*nu)),
            (1, []) => Ok(BaseGroup::InfiniteCyclic),
            _ => Err(PresentationError::Unsupported(format!(
                "base group {a} is not cyclic"
            ))),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            BaseGroup::Cyclic(nu) => Some(*nu),
            BaseGroup::InfiniteCyclic => None,
        }
    }

    fn name(&self) -> String {
        match self {
            BaseGroup::Cyclic(1) => "1".into(),
            BaseGroup::Cyclic(nu) => format!("Z/{nu}"),
            BaseGroup::InfiniteCyclic => "Z".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathGroupSpec {
    pub base: BaseGroup,
    pub copies: usize,
}

/// `(labels, perm)` with `labels ∈ G^n`; labels are reduced mod `ν` for finite bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathElement {
    pub labels: Vec<i64>,
    pub perm: Permutation,
}

impl WreathGroupSpec {
    pub fn new(base: BaseGroup, copies: usize) -> Result<Self, PresentationError> {
        if copies == 0 {
            return Err(PresentationError::Unsupported("wreath product needs n ≥ 1".into()));
        }
        if base == BaseGroup::Cyclic(0) {
            return Err(PresentationError::Unsupported("cyclic order must be ≥ 1".into()));
        }
        Ok(WreathGroupSpec { base, copies })
    }

    /// `ν^n · n!`, or `None` for an infinite base.
    pub fn order(&self) -> Option<BigUint> {
        let nu = self.base.order()?;
        let n = self.copies as u32;
        let factorial: BigUint = (1..=self.copies as u64).map(BigUint::from).product();
        Some(BigUint::from(nu).pow(n) * factorial)
    }

    /// Name such as `Z/3 wr S_4`, or `S_4` for a trivial base.
    pub fn name(&self) -> String {
        match self.base {
            BaseGroup::Cyclic(1) => format!("S_{}", self.copies),
            b => format!("{} wr S_{}", b.name(), self.copies),
        }
    }

    /// The structural homotopy statements that accompany the wreath
    /// description of configuration spaces in dimension `≥ 3`.
    pub fn homotopy_report(&self) -> String {
        let n = self.copies;
        let g = self.base.name();
        format!(
            "pi_1(F_{n}(X)) = ({g})^{n}; 1 -> ({g})^{n} -> B_{n}(X) -> S_{n} -> 1; \
             B_{n}(X) = {name}; pi_i(Conf_{n}(X)) = pi_i(X)^{n} for 2 <= i <= dim X - 2; \
             pi_2(Conf_{n}(M \\ Sigma)) = pi_2(M \\ Sigma)^{n}",
            name = self.name()
        )
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement {
            labels: vec![0; self.copies],
            perm: Permutation::identity(self.copies),
        }
    }

    pub fn element(&self, labels: Vec<i64>, perm: Permutation) -> Result<WreathElement, PresentationError> {
        let e = WreathElement { labels, perm };
        self.check(&e)?;
        Ok(self.reduce(e))
    }

    fn check(&self, e: &WreathElement) -> Result<(), PresentationError> {
        if e.labels.len() != self.copies || e.perm.len() != self.copies {
            return Err(PresentationError::ShapeMismatch(format!(
                "{} labels and a permutation of {} points for n = {}",
                e.labels.len(),
                e.perm.len(),
                self.copies
            )));
        }
        Ok(())
    }

    fn reduce(&self, mut e: WreathElement) -> WreathElement {
        if let Some(nu) = self.base.order() {
            let nu = nu as i64;
            for l in e.labels.iter_mut() {
                *l = l.rem_euclid(nu);
            }
        }
        e
    }

    /// `(a, π)(b, ρ) = (a + π·b, π∘ρ)` where `(π·b)_j = b_{π⁻¹(j)}`.
    pub fn multiply(&self, a: &WreathElement, b: &WreathElement) -> Result<WreathElement, PresentationError> {
        self.check(a)?;
        self.check(b)?;
        let mut labels = a.labels.clone();
        for (k, &lb) in b.labels.iter().enumerate() {
            labels[a.perm.apply(k)] += lb;
        }
        Ok(self.reduce(WreathElement {
            labels,
            perm: a.perm.compose(&b.perm),
        }))
    }

    pub fn inverse(&self, a: &WreathElement) -> Result<WreathElement, PresentationError> {
        self.check(a)?;
        let inv = a.perm.inverse();
        let labels = (0..self.copies).map(|k| -a.labels[a.perm.apply(k)]).collect();
        Ok(self.reduce(WreathElement { labels, perm: inv }))
    }

    /// Every element, for finite groups of at most `limit` elements.
    pub fn elements(&self, limit: usize) -> Result<Vec<WreathElement>, PresentationError> {
        let order = self
            .order()
            .ok_or_else(|| PresentationError::Unsupported("infinite wreath product".into()))?;
        if order > BigUint::from(limit) {
            return Err(PresentationError::Unsupported(format!("group of order {order} exceeds {limit}")));
        }
        let nu = self.base.order().unwrap_or(1) as i64;
        let perms = all_permutations(self.copies);
        let mut out = Vec::new();
        let mut labels = vec![0i64; self.copies];
        loop {
            for p in &perms {
                out.push(WreathElement {
                    labels: labels.clone(),
                    perm: p.clone(),
                });
            }
            // odometer over (ℤ/ν)^n
            let mut k = 0;
            while k < self.copies {
                labels[k] += 1;
                if labels[k] < nu {
                    break;
                }
                labels[k] = 0;
                k += 1;
            }
            if k == self.copies {
                break;
            }
        }
        Ok(out)
    }

    /// Order of an element of a finite wreath product.
    pub fn element_order(&self, a: &WreathElement) -> Result<BigUint, PresentationError> {
        if self.base.order().is_none() {
            return Err(PresentationError::Unsupported("infinite wreath product".into()));
        }
        let id = self.identity();
        let mut x = self.reduce(a.clone());
        let mut k = BigUint::one();
        while x != id {
            x = self.multiply(&x, a)?;
            k += 1u32;
        }
        Ok(k)
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation::from_images(prefix).expect("built a bijection"));
            return;
        }
        for x in 1..=n {
            if !used[x - 1] {
                used[x - 1] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `B_n` of a space of dimension `≥ 3` whose fundamental group is the
/// cyclic group summarized by `pi1`.
pub fn configuration_braid_group(
    pi1: &AbelianizationResult,
    n: usize,
) -> Result<WreathGroupSpec, PresentationError> {
    WreathGroupSpec::new(BaseGroup::from_abelianization(pi1)?, n)
}

pub fn wreath_multiply(
    a: &WreathElement,
    b: &WreathElement,
    spec: &WreathGroupSpec,
) -> Result<WreathElement, PresentationError> {
    spec.multiply(a, b)
}
