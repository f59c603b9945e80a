//! Short exact sequences and the rotation `0 -> A -> B -> C -> 0` to
//! `0 -> ΩC -> A + P -> B -> 0` built from a projective cover of `C`.

use super::module::FdModule;
use super::projective::syzygy_with_inclusion;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// `0 -> a -> b -> c -> 0` with `injection: a -> b` and `surjection: b -> c`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub a: FdModule,
    pub b: FdModule,
    pub c: FdModule,
    pub injection: Mat,
    pub surjection: Mat,
}

impl ShortExact {
    pub fn new(a: FdModule, b: FdModule, c: FdModule, injection: Mat, surjection: Mat) -> Result<Self> {
        let s = ShortExact {
            a,
            b,
            c,
            injection,
            surjection,
        };
        s.verify()?;
        Ok(s)
    }

    /// Maps are module maps, the composite vanishes, the injection is injective,
    /// the surjection surjective and dimensions add up.
    pub fn verify(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidShortExact(msg.into()));
        if !self.a.algebra().same_as(self.b.algebra()) || !self.b.algebra().same_as(self.c.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if !self.a.is_hom_to(&self.b, &self.injection) {
            return bad("injection is not a module map");
        }
        if !self.b.is_hom_to(&self.c, &self.surjection) {
            return bad("surjection is not a module map");
        }
        if !(&self.surjection * &self.injection).is_zero() {
            return bad("composite is nonzero");
        }
        if self.injection.rank() != self.a.dim() {
            return bad("first map is not injective");
        }
        if self.surjection.rank() != self.c.dim() {
            return bad("second map is not surjective");
        }
        if self.b.dim() != self.a.dim() + self.c.dim() {
            return bad("dimensions do not add up");
        }
        Ok(())
    }

    /// The split sequence `0 -> a -> a + c -> c -> 0`.
    pub fn split(a: &FdModule, c: &FdModule) -> Result<Self> {
        let f = a.field();
        let b = FdModule::direct_sum(&[a, c])?;
        let inj = Mat::vstack(
            f,
            a.dim(),
            &[&Mat::identity(f, a.dim()), &Mat::zeros(f, c.dim(), a.dim())],
        );
        let surj = Mat::hstack(
            f,
            c.dim(),
            &[&Mat::zeros(f, c.dim(), a.dim()), &Mat::identity(f, c.dim())],
        );
        ShortExact::new(a.clone(), b, c.clone(), inj, surj)
    }
}

/// The result of rotating a short exact sequence repeatedly.
#[derive(Clone, Debug)]
pub struct SpliceSequence {
    /// `sequences[0]` is the input; `sequences[r + 1]` rotates `sequences[r]`.
    pub sequences: Vec<ShortExact>,
    /// `connecting[r]: Ω(C_r) -> A_r`, the connecting map of rotation `r`.
    pub connecting: Vec<Mat>,
}

impl SpliceSequence {
    /// The chain `C, B, A, ΩC, ΩB, ΩA, Ω²C, ...` read right to left, i.e. with
    /// maps from each entry to the previous one.
    pub fn terms(&self) -> Vec<&FdModule> {
        let first = &self.sequences[0];
        let mut out = vec![&first.c, &first.b, &first.a];
        out.extend(self.sequences[1..].iter().map(|s| &s.a));
        out
    }

    /// The map from `terms()[k + 1]` to `terms()[k]`.
    pub fn maps(&self) -> Vec<&Mat> {
        let first = &self.sequences[0];
        let mut out = vec![&first.surjection, &first.injection];
        out.extend(self.connecting.iter());
        out
    }
}

/// One rotation: from `0 -> A -f-> B -g-> C -> 0` lift a cover `π: P -> C` to
/// `h: P -> B`, restrict to `ΩC` to get `δ: ΩC -> A`, and return
/// `0 -> ΩC -> A + P -> B -> 0` via `x -> (δx, -x)` and `(a, p) -> f a + h p`.
fn rotate(s: &ShortExact) -> Result<(ShortExact, Mat)> {
    let field = s.a.field();
    let (omega, incl, cover) = syzygy_with_inclusion(&s.c);
    let p = &cover.projective;
    let h = p.lift(&cover.surjection, &s.b, &s.surjection)?;
    let through_b = &h * &incl;
    let delta = s
        .injection
        .solve(&through_b)?
        .ok_or_else(|| Error::InvalidShortExact("lift does not land in the image of A".into()))?;
    let middle = FdModule::direct_sum(&[&s.a, &p.module])?;
    let inj = Mat::vstack(field, omega.dim(), &[&delta, &-&incl]);
    let surj = Mat::hstack(field, s.b.dim(), &[&s.injection, &h]);
    let next = ShortExact::new(omega, middle, s.b.clone(), inj, surj)?;
    Ok((next, delta))
}

/// Rotates `s` `depth` times, verifying every emitted sequence.
pub fn splice_syzygy_sequence(s: &ShortExact, depth: usize) -> Result<SpliceSequence> {
    s.verify()?;
    let mut sequences = vec![s.clone()];
    let mut connecting = Vec::with_capacity(depth);
    for _ in 0..depth {
        let (next, delta) = rotate(sequences.last().expect("nonempty"))?;
        sequences.push(next);
        connecting.push(delta);
    }
    Ok(SpliceSequence { sequences, connecting })
}
