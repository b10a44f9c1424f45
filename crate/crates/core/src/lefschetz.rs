//! Lefschetz fibrations over the disk and their conversion to relative
//! trisections.

use crate::error::{Error, Result};
use crate::linalg::{cokernel, AbelianGroup, IntMatrix};
use crate::openbook::{embed_class, hopf_stabilize, stabilizing_class, OpenBook, Sign, TwistLetter, Variant};
use crate::surface::{HomologyClass, Surface};
use crate::trisection::RelativeTrisection;

/// A vanishing cycle and the chirality of its singularity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VanishingCycle {
    pub class: HomologyClass,
    pub chirality: Sign,
}

impl VanishingCycle {
    pub fn new(class: HomologyClass, chirality: Sign) -> Self {
        VanishingCycle { class, chirality }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LefschetzFibration {
    pub fiber: Surface,
    pub cycles: Vec<VanishingCycle>,
}

impl LefschetzFibration {
    pub fn new(fiber: Surface, cycles: Vec<VanishingCycle>) -> Result<Self> {
        let lf = LefschetzFibration { fiber, cycles };
        lf.check()?;
        Ok(lf)
    }

    pub fn check(&self) -> Result<()> {
        if self.fiber.boundary == 0 {
            return Err(Error::ClosedFiber);
        }
        for c in &self.cycles {
            self.fiber.check_class(&c.class)?;
        }
        Ok(())
    }

    /// Euler characteristic of the total space: `χ(F) + #singularities`.
    pub fn euler(&self) -> i64 {
        self.fiber.euler() + self.cycles.len() as i64
    }
}

/// Bookkeeping left after wrinkling Lefschetz singularities into triple cuspoids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WrinkledRecord {
    pub fiber: Surface,
    pub lefschetz_remaining: Vec<VanishingCycle>,
    pub cuspoids: u32,
    pub central_genus: u32,
}

impl WrinkledRecord {
    pub fn unwrinkled(lf: &LefschetzFibration) -> Self {
        WrinkledRecord {
            fiber: lf.fiber,
            lefschetz_remaining: lf.cycles.clone(),
            cuspoids: 0,
            central_genus: lf.fiber.genus,
        }
    }

    /// Wrinkles the first remaining singularity.
    pub fn step(&self) -> Result<Self> {
        let (_, rest) = self.lefschetz_remaining.split_first().ok_or(Error::NothingToWrinkle)?;
        Ok(WrinkledRecord {
            fiber: self.fiber,
            lefschetz_remaining: rest.to_vec(),
            cuspoids: self.cuspoids + 1,
            central_genus: self.central_genus + 1,
        })
    }

    pub fn is_fixpoint(&self) -> bool {
        self.lefschetz_remaining.is_empty()
    }
}

/// Wrinkles every singularity.
pub fn wrinkle(lf: &LefschetzFibration) -> WrinkledRecord {
    let mut rec = WrinkledRecord::unwrinkled(lf);
    while let Ok(next) = rec.step() {
        rec = next;
    }
    rec
}

/// The open book on the boundary: page is the fiber, monodromy the product of
/// twists about the vanishing cycles in order.
pub fn induced_open_book(lf: &LefschetzFibration) -> OpenBook {
    OpenBook {
        pages: vec![lf.fiber],
        word: lf
            .cycles
            .iter()
            .map(|c| TwistLetter::new(0, c.class.clone(), c.chirality))
            .collect(),
    }
}

/// Attaches a canceling 1-2 pair, Hopf-stabilizing the induced open book.
pub fn stabilize_lefschetz(lf: &LefschetzFibration, variant: Variant, sign: Sign) -> Result<LefschetzFibration> {
    lf.check()?;
    if variant == Variant::DifferentBindings && lf.fiber.boundary < 2 {
        return Err(Error::SingleBindingCircle { index: 0 });
    }
    let mut cycles: Vec<VanishingCycle> = lf
        .cycles
        .iter()
        .map(|c| VanishingCycle::new(embed_class(lf.fiber, variant, &c.class), c.chirality))
        .collect();
    cycles.push(VanishingCycle::new(stabilizing_class(lf.fiber, variant), sign));
    let out = LefschetzFibration {
        fiber: variant.stabilized_page(lf.fiber),
        cycles,
    };
    debug_assert_eq!(
        Ok(induced_open_book(&out)),
        hopf_stabilize(&induced_open_book(lf), 0, variant, sign)
    );
    Ok(out)
}

/// Parameters of the trisection built from a handle decomposition relative to
/// the boundary open books.
///
/// `h1` and `h2` count 1- and 2-handles (3-handles are assumed to match the
/// 1-handles) and `c` the crossings of the 2-handle attaching link projected
/// to the pages. When `c > h2`, `c - h2` canceling 1-2 pairs and as many 2-3
/// pairs are added first.
pub fn trisection_from_open_book_handles(pages: &[Surface], h1: u64, h2: u64, c: u64) -> Result<RelativeTrisection> {
    let m = pages.len() as u64;
    if h1 + 1 < m {
        return Err(Error::TooFewOneHandles {
            h1,
            needed: m.saturating_sub(1),
        });
    }
    if c < h2 {
        return Err(Error::TooFewCrossings { c, h2 });
    }
    if let Some(index) = pages.iter().position(|p| p.boundary == 0) {
        return Err(Error::ClosedPage { index });
    }
    let extra = c - h2;
    let h1 = h1 + extra;
    let h2 = h2 + 2 * extra;

    let p: u64 = pages.iter().map(|s| u64::from(s.genus)).sum();
    let b: u64 = pages.iter().map(|s| u64::from(s.boundary)).sum();
    let l: u64 = pages.iter().map(|s| s.h1_rank() as u64).sum();
    let k = l + h1 + 1 - m;
    let g_base = p + h1 + 1 - m;
    let narrow = |v: u64| u32::try_from(v).expect("parameter exceeds u32");
    let t = RelativeTrisection {
        surface_genus: narrow(g_base + h2),
        surface_boundary: narrow(b),
        k: narrow(k),
        boundary: pages
            .iter()
            .map(|&page| OpenBook {
                pages: vec![page],
                word: Vec::new(),
            })
            .collect(),
    };
    t.validate()?;
    Ok(t)
}

/// Relative trisection of the total space, with the induced open book on the
/// boundary and one splitting stabilization per wrinkled singularity.
pub fn lf_to_trisection(lf: &LefschetzFibration) -> Result<RelativeTrisection> {
    lf_to_trisection_with_crossings(lf, lf.cycles.len() as u64)
}

/// As [`lf_to_trisection`], with `crossings >= #cycles` crossings of the
/// attaching link.
pub fn lf_to_trisection_with_crossings(lf: &LefschetzFibration, crossings: u64) -> Result<RelativeTrisection> {
    lf.check()?;
    if let Some(i) = lf.cycles.iter().position(|c| c.class.is_zero()) {
        return Err(Error::ZeroCycle(i));
    }
    let mut t = trisection_from_open_book_handles(&[lf.fiber], 0, lf.cycles.len() as u64, crossings)?;
    t.boundary = vec![induced_open_book(lf)];
    Ok(t)
}

/// `H_1` of the total space: `H_1(F)` modulo the vanishing cycles.
pub fn fourmanifold_h1(lf: &LefschetzFibration) -> Result<AbelianGroup> {
    lf.check()?;
    let columns: Vec<Vec<i64>> = lf.cycles.iter().map(|c| c.class.0.clone()).collect();
    Ok(cokernel(&IntMatrix::from_columns(lf.fiber.h1_rank(), &columns)))
}
