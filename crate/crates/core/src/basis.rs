//! Ordered bases `f_{1,χ}, ..., f_{ℓ,χ}` of the four spaces `M_2(48, χ)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::characters::DirichletCharacter as D;
use crate::eisenstein::{eisenstein_series, phi_ab, EisensteinSpec};
use crate::error::{Error, Result};
use crate::eta::CuspForm;
use crate::linalg;
use crate::qseries::QSeries;
use crate::theta::Space;

pub const MIN_PRECISION: usize = 30;

/// How a basis element is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// `φ_{a,b}(z)`
    Phi { a: u64, b: u64 },
    /// `E_{2,χ,ψ}(dz)`
    Eisenstein {
        chi: D,
        psi: D,
        dilation: u32,
    },
    /// A catalogued cusp form at `dz`.
    Cusp { form: CuspForm, dilation: u32 },
}

impl Descriptor {
    pub fn build(&self, precision: usize) -> QSeries {
        match *self {
            Descriptor::Phi { a, b } => phi_ab(a, b, precision).expect("basis divisor pairs are valid"),
            Descriptor::Eisenstein { chi, psi, dilation } => {
                let spec = EisensteinSpec::weight_two(chi, psi, dilation)
                    .expect("basis character pairs satisfy the parity condition");
                eisenstein_series(&spec, precision)
            }
            Descriptor::Cusp { form, dilation } => form.expand(precision).dilate(dilation as usize),
        }
    }

    pub fn is_cusp_form(&self) -> bool {
        matches!(self, Descriptor::Cusp { .. })
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Phi { a, b } => write!(f, "phi({a},{b})"),
            Descriptor::Eisenstein { chi, psi, dilation } => write!(f, "E2({chi}, {psi}, {dilation})"),
            Descriptor::Cusp { form, dilation: 1 } => write!(f, "{form}"),
            Descriptor::Cusp { form, dilation } => write!(f, "{form}({dilation}z)"),
        }
    }
}

impl Serialize for Descriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Position `index` (1-based) in the ordered basis of `space`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisElementId {
    pub space: Space,
    pub index: usize,
    pub descriptor: Descriptor,
}

const fn phi(b: u64) -> Descriptor {
    Descriptor::Phi { a: 1, b }
}

const fn eis(chi: D, psi: D, dilation: u32) -> Descriptor {
    Descriptor::Eisenstein { chi, psi, dilation }
}

const fn cusp(form: CuspForm, dilation: u32) -> Descriptor {
    Descriptor::Cusp { form, dilation }
}

const BASIS_CHI0: [Descriptor; 14] = [
    phi(2),
    phi(3),
    phi(4),
    phi(6),
    phi(8),
    phi(12),
    phi(16),
    phi(24),
    phi(48),
    eis(D::CHI_M4, D::CHI_M4, 1),
    eis(D::CHI_M4, D::CHI_M4, 3),
    cusp(CuspForm::Delta24, 1),
    cusp(CuspForm::Delta24, 2),
    cusp(CuspForm::Delta48, 1),
];

const BASIS_CHI8: [Descriptor; 12] = [
    eis(D::ONE, D::CHI_8, 1),
    eis(D::ONE, D::CHI_8, 2),
    eis(D::ONE, D::CHI_8, 3),
    eis(D::ONE, D::CHI_8, 6),
    eis(D::CHI_8, D::ONE, 1),
    eis(D::CHI_8, D::ONE, 2),
    eis(D::CHI_8, D::ONE, 3),
    eis(D::CHI_8, D::ONE, 6),
    cusp(CuspForm::Delta24Chi8One, 1),
    cusp(CuspForm::Delta24Chi8One, 2),
    cusp(CuspForm::Delta24Chi8Two, 1),
    cusp(CuspForm::Delta24Chi8Two, 2),
];

const BASIS_CHI12: [Descriptor; 14] = [
    eis(D::ONE, D::CHI_12, 1),
    eis(D::ONE, D::CHI_12, 2),
    eis(D::ONE, D::CHI_12, 4),
    eis(D::CHI_12, D::ONE, 1),
    eis(D::CHI_12, D::ONE, 2),
    eis(D::CHI_12, D::ONE, 4),
    eis(D::CHI_M4, D::CHI_M3, 1),
    eis(D::CHI_M4, D::CHI_M3, 2),
    eis(D::CHI_M4, D::CHI_M3, 4),
    eis(D::CHI_M3, D::CHI_M4, 1),
    eis(D::CHI_M3, D::CHI_M4, 2),
    eis(D::CHI_M3, D::CHI_M4, 4),
    cusp(CuspForm::Delta48Chi12One, 1),
    cusp(CuspForm::Delta48Chi12Two, 1),
];

const BASIS_CHI24: [Descriptor; 12] = [
    eis(D::ONE, D::CHI_24, 1),
    eis(D::ONE, D::CHI_24, 2),
    eis(D::CHI_24, D::ONE, 1),
    eis(D::CHI_24, D::ONE, 2),
    eis(D::CHI_M3, D::CHI_M8, 1),
    eis(D::CHI_M3, D::CHI_M8, 2),
    eis(D::CHI_M8, D::CHI_M3, 1),
    eis(D::CHI_M8, D::CHI_M3, 2),
    cusp(CuspForm::Delta24Chi24One, 1),
    cusp(CuspForm::Delta24Chi24One, 2),
    cusp(CuspForm::Delta48Chi24Two, 1),
    cusp(CuspForm::Delta48Chi24Two, 2),
];

/// Constructors of the basis of `space`, in order.
pub fn descriptors(space: Space) -> &'static [Descriptor] {
    match space {
        Space::Chi0 => &BASIS_CHI0,
        Space::Chi8 => &BASIS_CHI8,
        Space::Chi12 => &BASIS_CHI12,
        Space::Chi24 => &BASIS_CHI24,
    }
}

pub fn basis_ids(space: Space) -> Vec<BasisElementId> {
    descriptors(space)
        .iter()
        .enumerate()
        .map(|(i, &descriptor)| BasisElementId {
            space,
            index: i + 1,
            descriptor,
        })
        .collect()
}

type Cache = Mutex<HashMap<(Space, usize), Arc<Vec<QSeries>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The basis of `space` at `precision`, shared through a process-wide cache.
pub fn build_basis(space: Space, precision: usize) -> Result<Arc<Vec<QSeries>>> {
    if precision < MIN_PRECISION {
        return Err(Error::PrecisionTooLow {
            got: precision,
            min: MIN_PRECISION,
        });
    }
    if let Some(hit) = cache().lock().expect("basis cache poisoned").get(&(space, precision)) {
        return Ok(Arc::clone(hit));
    }
    let built: Arc<Vec<QSeries>> = Arc::new(descriptors(space).iter().map(|d| d.build(precision)).collect());
    let mut guard = cache().lock().expect("basis cache poisoned");
    Ok(Arc::clone(guard.entry((space, precision)).or_insert(built)))
}

/// Rank over ℚ of the `ℓ × P` coefficient matrix.
pub fn basis_rank(space: Space, precision: usize) -> Result<usize> {
    let basis = build_basis(space, precision)?;
    let rows: Vec<_> = basis.iter().map(|f| f.coeffs().to_vec()).collect();
    Ok(linalg::rank(&rows))
}
