use rayon::prelude::*;

use super::{Recognizer, Trail};
use crate::arith::{is_prime_with_rounds, PosInt, PrimePower};
use crate::spectra::{GroupName, MinSpec};

const STAGE: &str = "bounded";

impl Recognizer {
    /// Field orders worth trying at Lie rank `k`: odd ones from the
    /// largest-element equation, and every power of 2 up to `2·max - 1`.
    pub fn bounded_rank_fields(&self, mu: &MinSpec, k: u32) -> Vec<PrimePower> {
        let Some(b) = mu.max() else { return Vec::new() };
        let mut fields: Vec<PrimePower> = self
            .m1
            .candidates(b, Some(k), self.config.root_window)
            .into_iter()
            .map(|c| c.q)
            .filter(|q| !q.is_even() && is_prime_with_rounds(&q.p, self.config.primality_rounds))
            .collect();
        let limit: PosInt = b * 2u32 - 1u32;
        let mut e = 1;
        while PosInt::from(2u32).pow(e) <= limit {
            fields.push(PrimePower {
                p: PosInt::from(2u32),
                k: e,
            });
            e += 1;
        }
        let mut seen = Vec::new();
        fields.retain(|q| {
            let fresh = !seen.contains(q);
            if fresh {
                seen.push(q.clone());
            }
            fresh
        });
        fields
    }

    pub fn recognize_bounded_rank(&self, mu: &MinSpec, k: u32, trail: &mut Trail) -> Option<GroupName> {
        let bound = self.registry.size_bound(k);
        if mu.len() > bound {
            trail.note(STAGE, format!("rank {k}: |mu| = {} exceeds f({k}) = {bound}", mu.len()));
            return None;
        }
        let fields = self.bounded_rank_fields(mu, k);
        let mut groups: Vec<GroupName> = Vec::new();
        for q in &fields {
            for g in self.registry.groups(k, q) {
                if !groups.contains(&g) {
                    groups.push(g);
                }
            }
        }
        // candidates are independent; find_first keeps the sequential order
        let hit = groups
            .par_iter()
            .find_first(|g| self.registry.generate_mu(g).is_ok_and(|m| &m == mu))
            .cloned();
        match &hit {
            Some(g) => trail.note(STAGE, format!("rank {k}: mu equals the generated spectrum of {g}")),
            None if !groups.is_empty() => trail.note(
                STAGE,
                format!("rank {k}: {} generated candidates, none equal", groups.len()),
            ),
            None => {}
        }
        hit
    }
}
