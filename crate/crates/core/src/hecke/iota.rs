//! The homomorphism `ι_H` onto the algebra of the torsion-free quotient.

use std::sync::Arc;

use super::{HeckeAlgebra, HeckeElt, HeckeError};
use crate::ext::{ExtElt, Lat};

impl HeckeAlgebra {
    /// The algebra of `Λ / Λ_tor` with the same roots and parameters.
    pub fn torsion_free_quotient(&self) -> HeckeAlgebra {
        let group = Arc::new(self.group.torsion_free_quotient());
        HeckeAlgebra::new(format!("{}/tor", self.name), group, self.params.clone())
            .expect("parameters stay valid on the quotient")
    }

    pub fn iota_lat(lam: &Lat) -> Lat {
        lam.free_part()
    }

    pub fn iota_elt(w: &ExtElt) -> ExtElt {
        ExtElt {
            lam: w.lam.free_part(),
            u: w.u,
        }
    }

    /// `T_w ↦ T_{ι(w)}`, extended linearly.
    pub fn iota(&self, h: &HeckeElt, quotient: &HeckeAlgebra) -> Result<HeckeElt, HeckeError> {
        self.check(h)?;
        let (g, q) = (&self.group, &quotient.group);
        let compatible = q.lattice().torsion_orders().is_empty()
            && q.free_rank() == g.free_rank()
            && Arc::ptr_eq(q.weyl(), g.weyl())
            && quotient.params == self.params;
        if !compatible {
            return Err(HeckeError::ContextMismatch);
        }
        let mut out = quotient.zero();
        for (w, c) in h.terms() {
            out.add_term(&Self::iota_elt(w), c);
        }
        Ok(out)
    }
}
