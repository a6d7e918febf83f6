use std::collections::BTreeMap;

use crate::apery_forms::{zl_exact, zr_exact, FormParameters};
use crate::error::Result;
use crate::zeta_forms::ZetaLinearForm;

/// Memoized `Z_l` and `Z_r` values, filled on demand or from precomputed
/// cells.
#[derive(Clone, Debug, Default)]
pub struct FormGrid {
    left: BTreeMap<FormParameters, ZetaLinearForm>,
    right: BTreeMap<FormParameters, ZetaLinearForm>,
}

impl FormGrid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: FormParameters, zl: ZetaLinearForm, zr: ZetaLinearForm) {
        self.left.insert(p, zl);
        self.right.insert(p, zr);
    }

    pub fn insert_left(&mut self, p: FormParameters, zl: ZetaLinearForm) {
        self.left.insert(p, zl);
    }

    pub fn insert_right(&mut self, p: FormParameters, zr: ZetaLinearForm) {
        self.right.insert(p, zr);
    }

    pub fn left(&mut self, p: FormParameters) -> Result<ZetaLinearForm> {
        if let Some(z) = self.left.get(&p) {
            return Ok(z.clone());
        }
        let z = zl_exact(p)?;
        self.left.insert(p, z.clone());
        Ok(z)
    }

    pub fn right(&mut self, p: FormParameters) -> Result<ZetaLinearForm> {
        if let Some(z) = self.right.get(&p) {
            return Ok(z.clone());
        }
        let z = zr_exact(p)?;
        self.right.insert(p, z.clone());
        Ok(z)
    }
}
