//! Gluing relative trisections along boundary components, and the category
//! whose morphisms are relatively trisected cobordisms.

use crate::error::{Error, Result};
use crate::openbook::{check_compatible, OpenBook};
use crate::surface::Surface;
use crate::trisection::{stably_equivalent, ClosedTrisection, RelativeTrisection, Trisection};

/// Identifies boundary component `x` of the first trisection with component
/// `w` of the second, for every `(x, w)` in `pairs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluePairing {
    pairs: Vec<(usize, usize)>,
}

impl GluePairing {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyPairing);
        }
        for (a, &(x, w)) in pairs.iter().enumerate() {
            for &(x2, w2) in &pairs[..a] {
                if x == x2 {
                    return Err(Error::NonInjectivePairing {
                        side: "first",
                        index: x,
                    });
                }
                if w == w2 {
                    return Err(Error::NonInjectivePairing {
                        side: "second",
                        index: w,
                    });
                }
            }
        }
        Ok(GluePairing { pairs })
    }

    pub fn single(x: usize, w: usize) -> Self {
        GluePairing { pairs: vec![(x, w)] }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// The surface obtained by identifying `circles` boundary circles of `x`
/// with `circles` boundary circles of `w`.
pub fn glued_surface(x: Surface, w: Surface, circles: u32) -> Result<Surface> {
    let available = x.boundary.min(w.boundary);
    if circles == 0 || circles > available {
        return Err(Error::TooManyCircles { circles, available });
    }
    Ok(Surface::new(
        x.genus + w.genus + circles - 1,
        x.boundary + w.boundary - 2 * circles,
    ))
}

/// Glues `tx` and `tw` along the paired boundary components.
///
/// Paired open books must be compatible. The result is closed when no
/// boundary remains. Its Euler characteristic is checked against
/// `χ(X) + χ(W)` before returning.
pub fn glue(tx: &RelativeTrisection, tw: &RelativeTrisection, pairing: &GluePairing) -> Result<Trisection> {
    glue_impl(tx, tw, pairing, false)
}

/// Like [`glue`], but only page types of paired components are compared.
pub fn glue_forced(tx: &RelativeTrisection, tw: &RelativeTrisection, pairing: &GluePairing) -> Result<Trisection> {
    glue_impl(tx, tw, pairing, true)
}

fn glue_impl(
    tx: &RelativeTrisection,
    tw: &RelativeTrisection,
    pairing: &GluePairing,
    force: bool,
) -> Result<Trisection> {
    let rx = tx.validate()?;
    let rw = tw.validate()?;
    for &(i, j) in pairing.pairs() {
        if i >= tx.m() || j >= tw.m() {
            return Err(Error::Incompatible {
                x: i,
                w: j,
                reason: format!("index out of range ({} and {} components)", tx.m(), tw.m()),
            });
        }
        check_compatible(&tx.boundary[i], &tw.boundary[j], &[(0, 0)], force).map_err(|e| match e {
            Error::Incompatible { reason, .. } => Error::Incompatible { x: i, w: j, reason },
            other => other,
        })?;
    }

    let glued_circles: u32 = pairing.pairs().iter().map(|&(i, _)| tx.page(i).boundary).sum();
    let glued_l: i64 = pairing.pairs().iter().map(|&(i, _)| rx.l_i[i]).sum();
    let surface = glued_surface(
        Surface::new(tx.surface_genus, tx.surface_boundary),
        Surface::new(tw.surface_genus, tw.surface_boundary),
        glued_circles,
    )?;

    let s = pairing.len() as i64;
    // Handlebody genus of each new pairwise intersection: all thickened pages
    // not glued away, both sets of compressing 1-handles less the ones used
    // to connect components, plus the s - 1 extra loops from gluing s pairs.
    let k = (rx.l + rw.l - glued_l) + rx.n + rw.n - (rx.m - 1) - (rw.m - 1) + (s - 1);

    let boundary: Vec<OpenBook> = unpaired(&tx.boundary, pairing.pairs().iter().map(|p| p.0))
        .chain(unpaired(&tw.boundary, pairing.pairs().iter().map(|p| p.1)))
        .collect();

    let ledger = format!(
        "G = {} + {} + {} - 1 = {}, b = {}, k = ({} + {} - {}) + {} + {} - {} - {} + {} = {}, s = {}",
        tx.surface_genus,
        tw.surface_genus,
        glued_circles,
        surface.genus,
        surface.boundary,
        rx.l,
        rw.l,
        glued_l,
        rx.n,
        rw.n,
        rx.m - 1,
        rw.m - 1,
        s - 1,
        k,
        s
    );
    let k = u32::try_from(k).map_err(|_| Error::GluedInvalid {
        violations: Vec::new(),
        ledger: ledger.clone(),
    })?;

    let result = if surface.boundary == 0 {
        let closed = ClosedTrisection { g: surface.genus, k };
        if let Err(Error::Invalid(violations)) = closed.validate() {
            return Err(Error::GluedInvalid { violations, ledger });
        }
        Trisection::Closed(closed)
    } else {
        let rel = RelativeTrisection {
            surface_genus: surface.genus,
            surface_boundary: surface.boundary,
            k,
            boundary,
        };
        match rel.validate() {
            Err(Error::Invalid(violations)) => return Err(Error::GluedInvalid { violations, ledger }),
            Err(other) => return Err(other),
            Ok(_) => {}
        }
        Trisection::Relative(rel)
    };

    let got = result.euler()?;
    let expected = rx.chi + rw.chi;
    if got != expected {
        return Err(Error::EulerMismatch { got, expected, ledger });
    }
    Ok(result)
}

fn unpaired<'a>(books: &'a [OpenBook], used: impl Iterator<Item = usize>) -> impl Iterator<Item = OpenBook> + 'a {
    let mut taken = vec![false; books.len()];
    for i in used {
        taken[i] = true;
    }
    books.iter().zip(taken).filter(|(_, t)| !t).map(|(b, _)| b.clone())
}

/// A relatively trisected cobordism from the `source` boundary components to
/// the remaining ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriMorphism {
    trisection: Trisection,
    source: Vec<usize>,
}

impl TriMorphism {
    /// `source` is sorted and deduplicated; every index must name a boundary
    /// component.
    pub fn new(trisection: Trisection, mut source: Vec<usize>) -> Result<Self> {
        trisection.validate()?;
        source.sort_unstable();
        source.dedup();
        let m = trisection.as_relative().map_or(0, RelativeTrisection::m);
        if source.iter().any(|&i| i >= m) {
            return Err(Error::BadSource(source));
        }
        Ok(TriMorphism { trisection, source })
    }

    pub fn trisection(&self) -> &Trisection {
        &self.trisection
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> Vec<usize> {
        let m = self.trisection.as_relative().map_or(0, RelativeTrisection::m);
        (0..m).filter(|i| !self.source.contains(i)).collect()
    }

    fn books(&self, indices: &[usize]) -> Vec<OpenBook> {
        match &self.trisection {
            Trisection::Relative(r) => indices.iter().map(|&i| r.boundary[i].clone()).collect(),
            Trisection::Closed(_) => Vec::new(),
        }
    }

    pub fn source_books(&self) -> Vec<OpenBook> {
        self.books(&self.source)
    }

    pub fn target_books(&self) -> Vec<OpenBook> {
        self.books(&self.target())
    }

    pub fn into_trisection(self) -> Trisection {
        self.trisection
    }
}

/// `f` followed by `g`: glues the targets of `f` to the sources of `g`, in
/// index order.
pub fn compose(f: &TriMorphism, g: &TriMorphism) -> Result<TriMorphism> {
    let targets = f.target();
    if targets.len() != g.source.len() {
        return Err(Error::ArityMismatch(targets.len(), g.source.len()));
    }
    let (Trisection::Relative(tf), Trisection::Relative(tg)) = (&f.trisection, &g.trisection) else {
        return Err(Error::EmptyPairing);
    };
    let pairing = GluePairing::new(targets.into_iter().zip(g.source.iter().copied()).collect())?;
    let glued = glue(tf, tg, &pairing)?;
    // unpaired components of f (its sources) come first
    TriMorphism::new(glued, (0..f.source.len()).collect())
}

/// The product cobordism `M × I` on a connected open book.
///
/// Component 0 is the source side and carries the orientation-reversed word;
/// component 1 carries `ob` itself.
pub fn identity_trisection(ob: &OpenBook) -> Result<TriMorphism> {
    ob.check()?;
    if ob.pages.len() != 1 {
        return Err(Error::NoSuchComponent {
            index: 1,
            count: ob.pages.len(),
        });
    }
    let page = ob.pages[0];
    let (p, b) = (page.genus, page.boundary);
    let t = RelativeTrisection::new(
        6 * p + 2 * b - 2,
        2 * b,
        4 * p + 2 * b - 2,
        vec![ob.reversed(), ob.clone()],
    )?;
    TriMorphism::new(t.into(), vec![0])
}

pub fn morphisms_stably_equivalent(f: &TriMorphism, g: &TriMorphism) -> Result<bool> {
    Ok(f.source == g.source && stably_equivalent(&f.trisection, &g.trisection)?)
}
