//! Relative and closed trisection parameters.
//!
//! A relative trisection is stored as the genus `G` and boundary count `b` of
//! its central surface, the genus `k` of each piece, and the open book it
//! induces on every boundary component. Everything else is derived:
//!
//! ```text
//! m      = number of boundary components      p = Σ p_i
//! g_base = k + m - p - b                       n = g_base - p + (m - 1)
//! s      = G - g_base                          l_i = 2 p_i + b_i - 1
//! ```
//!
//! `g_base` is the genus of the unstabilized splitting surface and `s` the
//! number of further stabilizations of that splitting.

use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::openbook::{self, OpenBook, Sign, Variant};
use crate::surface::Surface;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeTrisection {
    pub surface_genus: u32,
    pub surface_boundary: u32,
    pub k: u32,
    /// One connected open book per boundary component.
    pub boundary: Vec<OpenBook>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedTrisection {
    pub g: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Trisection {
    Relative(RelativeTrisection),
    Closed(ClosedTrisection),
}

/// Derived quantities of a valid relative trisection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedReport {
    pub n: i64,
    pub g_base: i64,
    pub s: i64,
    pub l_i: Vec<i64>,
    pub l: i64,
    pub p: i64,
    pub m: i64,
    pub chi: i64,
}

impl DerivedReport {
    /// `(name, value)` pairs in report order.
    pub fn lines(&self) -> Vec<(&'static str, String)> {
        let l_i = self.l_i.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        vec![
            ("n", self.n.to_string()),
            ("g_base", self.g_base.to_string()),
            ("s", self.s.to_string()),
            ("l_i", format!("[{l_i}]")),
            ("l", self.l.to_string()),
            ("p", self.p.to_string()),
            ("m", self.m.to_string()),
            ("chi", self.chi.to_string()),
        ]
    }
}

impl fmt::Display for DerivedReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.lines() {
            writeln!(f, "{name} = {value}")?;
        }
        Ok(())
    }
}

impl ClosedTrisection {
    pub fn new(g: u32, k: u32) -> Result<Self> {
        let t = ClosedTrisection { g, k };
        t.validate()?;
        Ok(t)
    }

    /// The genus-0 trisection of `S^4`.
    pub fn sphere() -> Self {
        ClosedTrisection { g: 0, k: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.g < self.k {
            return Err(Error::Invalid(vec![Violation::ClosedGenusBelowK {
                g: self.g,
                k: self.k,
            }]));
        }
        Ok(())
    }

    pub fn euler(&self) -> i64 {
        2 + i64::from(self.g) - 3 * i64::from(self.k)
    }

    pub fn interior_stabilize(&self) -> Result<Self> {
        self.validate()?;
        Ok(ClosedTrisection {
            g: self.g + 3,
            k: self.k + 1,
        })
    }
}

impl RelativeTrisection {
    pub fn new(surface_genus: u32, surface_boundary: u32, k: u32, boundary: Vec<OpenBook>) -> Result<Self> {
        let t = RelativeTrisection {
            surface_genus,
            surface_boundary,
            k,
            boundary,
        };
        t.validate()?;
        Ok(t)
    }

    /// The genus-0 trisection of `B^4` inducing the trivial open book on `S^3`.
    pub fn ball() -> Self {
        RelativeTrisection {
            surface_genus: 0,
            surface_boundary: 1,
            k: 0,
            boundary: vec![OpenBook::trivial()],
        }
    }

    /// `S^3 × I` with the trivial open book on both ends.
    pub fn sphere_cylinder() -> Self {
        RelativeTrisection {
            surface_genus: 0,
            surface_boundary: 2,
            k: 0,
            boundary: vec![OpenBook::trivial(), OpenBook::trivial()],
        }
    }

    pub fn m(&self) -> usize {
        self.boundary.len()
    }

    /// Page of boundary component `i`; pages of malformed books read as closed.
    pub fn page(&self, i: usize) -> Surface {
        self.boundary[i].pages.first().copied().unwrap_or(Surface::new(0, 0))
    }

    pub fn pages(&self) -> impl Iterator<Item = Surface> + '_ {
        (0..self.m()).map(|i| self.page(i))
    }

    fn total_page_genus(&self) -> i64 {
        self.pages().map(|p| i64::from(p.genus)).sum()
    }

    pub fn g_base(&self) -> i64 {
        i64::from(self.k) + self.m() as i64 - self.total_page_genus() - i64::from(self.surface_boundary)
    }

    pub fn validate(&self) -> Result<DerivedReport> {
        let mut violations = Vec::new();
        let m = self.m() as i64;
        let b = self.surface_boundary;
        if b == 0 {
            violations.push(Violation::NoSurfaceBoundary);
        }
        if m == 0 {
            violations.push(Violation::NoBoundaryComponents);
        }
        for (index, ob) in self.boundary.iter().enumerate() {
            if ob.pages.len() != 1 {
                violations.push(Violation::BadLetter {
                    index,
                    letter: 0,
                    reason: format!("boundary open book has {} page components, expected 1", ob.pages.len()),
                });
                continue;
            }
            if ob.pages[0].boundary == 0 {
                violations.push(Violation::ClosedPage { index });
            }
            for (letter, l) in ob.word.iter().enumerate() {
                if l.component != 0 {
                    violations.push(Violation::BadLetter {
                        index,
                        letter,
                        reason: format!("component {} does not exist", l.component),
                    });
                } else if let Err(e) = ob.pages[0].check_class(&l.curve) {
                    violations.push(Violation::BadLetter {
                        index,
                        letter,
                        reason: e.to_string(),
                    });
                }
            }
        }
        let page_boundary: u64 = self.pages().map(|p| u64::from(p.boundary)).sum();
        if page_boundary != u64::from(b) {
            violations.push(Violation::BoundarySum {
                pages: page_boundary,
                surface: b,
            });
        }

        let p = self.total_page_genus();
        let g_base = self.g_base();
        let n = g_base - p + (m - 1);
        let s = i64::from(self.surface_genus) - g_base;
        if g_base < 0 {
            violations.push(Violation::NegativeBaseGenus { g_base });
        }
        if n < m - 1 {
            violations.push(Violation::TooFewCompressions { n, needed: m - 1 });
        }
        if s < 0 {
            violations.push(Violation::NegativeStabilizations {
                s,
                surface_genus: self.surface_genus,
                g_base,
            });
        }
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }

        let l_i: Vec<i64> = self
            .pages()
            .map(|pg| 2 * i64::from(pg.genus) + i64::from(pg.boundary) - 1)
            .collect();
        let l = l_i.iter().sum();
        let b = i64::from(b);
        debug_assert_eq!(i64::from(self.k), 2 * g_base + b - 1 - n);
        debug_assert_eq!(p, g_base - (n - (m - 1)));
        Ok(DerivedReport {
            n,
            g_base,
            s,
            l_i,
            l,
            p,
            m,
            chi: 2 - 2 * g_base + s - b,
        })
    }

    pub fn euler(&self) -> Result<i64> {
        Ok(self.validate()?.chi)
    }

    pub fn boundary_open_books(&self) -> Result<Vec<OpenBook>> {
        self.validate()?;
        Ok(self.boundary.clone())
    }

    pub fn interior_stabilize(&self) -> Result<Self> {
        self.validate()?;
        Ok(RelativeTrisection {
            surface_genus: self.surface_genus + 3,
            k: self.k + 1,
            ..self.clone()
        })
    }

    /// Stabilizes relative to boundary component `comp`, Hopf-stabilizing its
    /// open book and leaving every other component untouched.
    pub fn relative_stabilize(&self, comp: usize, variant: Variant, sign: Sign) -> Result<Self> {
        self.validate()?;
        let ob = self.boundary.get(comp).ok_or(Error::NoSuchComponent {
            index: comp,
            count: self.m(),
        })?;
        let stabilized = openbook::hopf_stabilize(ob, 0, variant, sign).map_err(|e| match e {
            Error::SingleBindingCircle { .. } => Error::SingleBindingCircle { index: comp },
            other => other,
        })?;
        let mut boundary = self.boundary.clone();
        boundary[comp] = stabilized;
        let (surface_genus, surface_boundary) = match variant {
            Variant::SameBinding => (self.surface_genus + 1, self.surface_boundary + 1),
            Variant::DifferentBindings => (self.surface_genus + 2, self.surface_boundary - 1),
        };
        let t = RelativeTrisection {
            surface_genus,
            surface_boundary,
            k: self.k + 1,
            boundary,
        };
        debug_assert!(t.validate().is_ok());
        Ok(t)
    }
}

impl From<RelativeTrisection> for Trisection {
    fn from(t: RelativeTrisection) -> Self {
        Trisection::Relative(t)
    }
}

impl From<ClosedTrisection> for Trisection {
    fn from(t: ClosedTrisection) -> Self {
        Trisection::Closed(t)
    }
}

impl Trisection {
    pub fn validate(&self) -> Result<()> {
        match self {
            Trisection::Relative(t) => t.validate().map(drop),
            Trisection::Closed(t) => t.validate(),
        }
    }

    pub fn euler(&self) -> Result<i64> {
        match self {
            Trisection::Relative(t) => t.euler(),
            Trisection::Closed(t) => t.validate().map(|_| t.euler()),
        }
    }

    pub fn surface_genus(&self) -> u32 {
        match self {
            Trisection::Relative(t) => t.surface_genus,
            Trisection::Closed(t) => t.g,
        }
    }

    pub fn k(&self) -> u32 {
        match self {
            Trisection::Relative(t) => t.k,
            Trisection::Closed(t) => t.k,
        }
    }

    pub fn as_relative(&self) -> Option<&RelativeTrisection> {
        match self {
            Trisection::Relative(t) => Some(t),
            Trisection::Closed(_) => None,
        }
    }

    pub fn as_closed(&self) -> Option<&ClosedTrisection> {
        match self {
            Trisection::Closed(t) => Some(t),
            Trisection::Relative(_) => None,
        }
    }

    pub fn interior_stabilize(&self) -> Result<Self> {
        Ok(match self {
            Trisection::Relative(t) => t.interior_stabilize()?.into(),
            Trisection::Closed(t) => t.interior_stabilize()?.into(),
        })
    }

    /// `G - 3k`, unchanged by interior stabilization.
    pub fn stable_invariant(&self) -> i64 {
        i64::from(self.surface_genus()) - 3 * i64::from(self.k())
    }
}

/// Connected sum. Genus, boundary and `k` add; boundary lists concatenate.
pub fn connected_sum(t1: &Trisection, t2: &Trisection) -> Result<Trisection> {
    t1.validate()?;
    t2.validate()?;
    let parts = |t: &Trisection| match t {
        Trisection::Relative(r) => (r.surface_genus, r.surface_boundary, r.k, r.boundary.clone()),
        Trisection::Closed(c) => (c.g, 0, c.k, Vec::new()),
    };
    let (g1, b1, k1, mut books) = parts(t1);
    let (g2, b2, k2, books2) = parts(t2);
    books.extend(books2);
    let out = if books.is_empty() {
        Trisection::Closed(ClosedTrisection { g: g1 + g2, k: k1 + k2 })
    } else {
        Trisection::Relative(RelativeTrisection {
            surface_genus: g1 + g2,
            surface_boundary: b1 + b2,
            k: k1 + k2,
            boundary: books,
        })
    };
    debug_assert!(out.validate().is_ok());
    Ok(out)
}

/// Whether the two trisections become equal after interior stabilizations.
///
/// Interior stabilization sends `(G, k)` to `(G+3, k+1)` and fixes the
/// boundary, so this holds iff the boundary data agree and `G - 3k` agrees.
pub fn stably_equivalent(t1: &Trisection, t2: &Trisection) -> Result<bool> {
    t1.validate()?;
    t2.validate()?;
    match (t1, t2) {
        (Trisection::Closed(_), Trisection::Closed(_)) => Ok(t1.stable_invariant() == t2.stable_invariant()),
        (Trisection::Relative(a), Trisection::Relative(b)) => Ok(a.surface_boundary == b.surface_boundary
            && a.m() == b.m()
            && a.boundary.iter().zip(&b.boundary).all(|(x, y)| x.action_equivalent(y))
            && t1.stable_invariant() == t2.stable_invariant()),
        _ => Err(Error::MixedKinds("stable equivalence")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(g: u32, k: u32) -> Trisection {
        ClosedTrisection::new(g, k).unwrap().into()
    }

    #[test]
    fn ball_report() {
        let r = RelativeTrisection::ball().validate().unwrap();
        assert_eq!((r.n, r.g_base, r.s, r.chi), (0, 0, 0, 1));
        assert_eq!(r.l_i, vec![0]);
    }

    #[test]
    fn cylinder_report() {
        let r = RelativeTrisection::sphere_cylinder().validate().unwrap();
        assert_eq!((r.n, r.g_base, r.s, r.chi, r.m), (1, 0, 0, 0, 2));
    }

    #[test]
    fn closed_page_is_reported() {
        let t = RelativeTrisection {
            surface_genus: 0,
            surface_boundary: 1,
            k: 0,
            boundary: vec![OpenBook {
                pages: vec![Surface::new(0, 0)],
                word: vec![],
            }],
        };
        let Err(Error::Invalid(v)) = t.validate() else {
            panic!("closed page accepted");
        };
        assert!(v.contains(&Violation::ClosedPage { index: 0 }));
    }

    #[test]
    fn too_large_k_is_reported() {
        let t = RelativeTrisection {
            k: 5,
            ..RelativeTrisection::ball()
        };
        let Err(Error::Invalid(v)) = t.validate() else {
            panic!("accepted k = 5");
        };
        assert_eq!(
            v,
            vec![Violation::NegativeStabilizations {
                s: -5,
                surface_genus: 0,
                g_base: 5
            }]
        );
        assert!(t.euler().is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(closed(1, 1).euler().unwrap(), 0);
        assert_eq!(RelativeTrisection::ball().euler().unwrap(), 1);
        let t = RelativeTrisection::new(1, 2, 1, vec![OpenBook::single(Surface::ANNULUS, vec![]).unwrap()]).unwrap();
        assert_eq!(t.euler().unwrap(), 1);
    }

    #[test]
    fn boundary_books() {
        assert_eq!(
            RelativeTrisection::ball().boundary_open_books().unwrap(),
            vec![OpenBook::trivial()]
        );
        assert_eq!(
            RelativeTrisection::sphere_cylinder().boundary_open_books().unwrap(),
            vec![OpenBook::trivial(); 2]
        );
    }

    #[test]
    fn interior_stabilization() {
        let s = closed(0, 0).interior_stabilize().unwrap();
        assert_eq!(s, closed(3, 1));
        assert_eq!(s.euler().unwrap(), 2);

        let b = RelativeTrisection::ball().interior_stabilize().unwrap();
        assert_eq!((b.surface_genus, b.surface_boundary, b.k), (3, 1, 1));
        assert_eq!(b.boundary, RelativeTrisection::ball().boundary);
        assert_eq!(b.euler().unwrap(), 1);
        let r = b.validate().unwrap();
        assert_eq!((r.g_base, r.s), (1, 2));

        let t: Trisection = RelativeTrisection::ball().into();
        let thrice = t
            .interior_stabilize()
            .and_then(|t| t.interior_stabilize())
            .and_then(|t| t.interior_stabilize())
            .unwrap();
        assert_eq!((thrice.surface_genus(), thrice.k()), (9, 3));
    }

    #[test]
    fn relative_stabilization_same_binding() {
        let t = RelativeTrisection::ball()
            .relative_stabilize(0, Variant::SameBinding, Sign::Positive)
            .unwrap();
        assert_eq!((t.surface_genus, t.surface_boundary, t.k), (1, 2, 1));
        assert_eq!(t.page(0), Surface::ANNULUS);
        assert_eq!(t.boundary[0].word.len(), 1);
        assert_eq!(t.euler().unwrap(), 1);
    }

    #[test]
    fn relative_stabilization_different_bindings() {
        let start =
            RelativeTrisection::new(1, 2, 1, vec![OpenBook::single(Surface::ANNULUS, vec![]).unwrap()]).unwrap();
        let t = start
            .relative_stabilize(0, Variant::DifferentBindings, Sign::Negative)
            .unwrap();
        assert_eq!((t.surface_genus, t.surface_boundary, t.k), (3, 1, 2));
        assert_eq!(t.page(0), Surface::new(1, 1));
        assert_eq!(t.euler().unwrap(), start.euler().unwrap());
    }

    #[test]
    fn relative_stabilization_rejects_disk_handle() {
        let err = RelativeTrisection::ball().relative_stabilize(0, Variant::DifferentBindings, Sign::Positive);
        assert_eq!(err, Err(Error::SingleBindingCircle { index: 0 }));
    }

    #[test]
    fn connected_sums() {
        let b4: Trisection = RelativeTrisection::ball().into();
        assert_eq!(
            connected_sum(&b4, &b4).unwrap(),
            RelativeTrisection::sphere_cylinder().into()
        );
        let s = connected_sum(&closed(0, 0), &closed(0, 0)).unwrap();
        assert_eq!(s, closed(0, 0));
        assert_eq!(s.euler().unwrap(), 2);
        let mixed = connected_sum(&b4, &closed(3, 1)).unwrap();
        let r = mixed.as_relative().unwrap();
        assert_eq!((r.surface_genus, r.surface_boundary, r.k), (3, 1, 1));
        assert_eq!(mixed.euler().unwrap(), 1);
    }

    #[test]
    fn stable_equivalence_examples() {
        assert!(stably_equivalent(&closed(0, 0), &closed(3, 1)).unwrap());
        assert!(!stably_equivalent(&closed(0, 0), &closed(1, 0)).unwrap());
        let b4: Trisection = RelativeTrisection::ball().into();
        let twice = b4.interior_stabilize().unwrap().interior_stabilize().unwrap();
        assert!(stably_equivalent(&b4, &twice).unwrap());
        assert_eq!(
            stably_equivalent(&b4, &closed(0, 0)),
            Err(Error::MixedKinds("stable equivalence"))
        );
    }

    #[test]
    fn stable_equivalence_sees_words() {
        let page = Surface::new(1, 1);
        let with = RelativeTrisection::new(
            2,
            1,
            2,
            vec![OpenBook::single(page, vec![(page.a(1), Sign::Positive)]).unwrap()],
        )
        .unwrap();
        let without = RelativeTrisection::new(2, 1, 2, vec![OpenBook::single(page, vec![]).unwrap()]).unwrap();
        assert!(!stably_equivalent(&with.clone().into(), &without.into()).unwrap());
        let cancelled = RelativeTrisection::new(
            2,
            1,
            2,
            vec![OpenBook::single(
                page,
                vec![
                    (page.a(1), Sign::Positive),
                    (page.b(1), Sign::Positive),
                    (page.b(1), Sign::Negative),
                ],
            )
            .unwrap()],
        )
        .unwrap();
        assert!(stably_equivalent(&with.into(), &cancelled.into()).unwrap());
    }
}
