//! Abstract open books with monodromy recorded as a word of signed Dehn twists.
//!
//! Only the action of the monodromy on first homology is modelled. A word
//! `[w_1, ..., w_n]` denotes the composite `w_1 ∘ ... ∘ w_n`, so its action is
//! the matrix product `T(w_1) * ... * T(w_n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::surface::{HomologyClass, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::BadSign(other)),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Which kind of Hopf band is plumbed onto a page.
///
/// `SameBinding` attaches both feet of the band to one binding circle, turning
/// `F(p,b)` into `F(p,b+1)`. `DifferentBindings` joins two distinct circles,
/// turning `F(p,b)` into `F(p+1,b-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    SameBinding,
    DifferentBindings,
}

impl Variant {
    pub fn stabilized_page(self, page: Surface) -> Surface {
        match self {
            Variant::SameBinding => Surface::new(page.genus, page.boundary + 1),
            Variant::DifferentBindings => Surface::new(page.genus + 1, page.boundary - 1),
        }
    }
}

/// A signed Dehn twist about a homology class on one page component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistLetter {
    pub component: usize,
    pub curve: HomologyClass,
    pub sign: Sign,
}

impl TwistLetter {
    pub fn new(component: usize, curve: HomologyClass, sign: Sign) -> Self {
        TwistLetter { component, curve, sign }
    }

    pub fn inverse(&self) -> Self {
        TwistLetter {
            sign: self.sign.flipped(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenBook {
    pub pages: Vec<Surface>,
    pub word: Vec<TwistLetter>,
}

impl OpenBook {
    pub fn new(pages: Vec<Surface>, word: Vec<TwistLetter>) -> Result<Self> {
        let ob = OpenBook { pages, word };
        ob.check()?;
        Ok(ob)
    }

    /// The open book on `S^3` with disk page and trivial monodromy.
    pub fn trivial() -> Self {
        OpenBook {
            pages: vec![Surface::DISK],
            word: Vec::new(),
        }
    }

    /// A connected page with the given twists, all on component 0.
    pub fn single(page: Surface, twists: Vec<(HomologyClass, Sign)>) -> Result<Self> {
        let word = twists
            .into_iter()
            .map(|(curve, sign)| TwistLetter::new(0, curve, sign))
            .collect();
        OpenBook::new(vec![page], word)
    }

    pub fn check(&self) -> Result<()> {
        for (index, page) in self.pages.iter().enumerate() {
            if page.boundary == 0 {
                return Err(Error::ClosedPage { index });
            }
        }
        for letter in &self.word {
            let page = self.pages.get(letter.component).ok_or(Error::NoSuchComponent {
                index: letter.component,
                count: self.pages.len(),
            })?;
            page.check_class(&letter.curve)?;
        }
        Ok(())
    }

    /// Letters acting on `component`, in word order.
    pub fn component_word(&self, component: usize) -> impl Iterator<Item = &TwistLetter> {
        self.word.iter().filter(move |l| l.component == component)
    }

    /// Extracts one component as a connected open book.
    pub fn component(&self, component: usize) -> Result<OpenBook> {
        let page = *self.pages.get(component).ok_or(Error::NoSuchComponent {
            index: component,
            count: self.pages.len(),
        })?;
        let word = self
            .component_word(component)
            .map(|l| TwistLetter {
                component: 0,
                ..l.clone()
            })
            .collect();
        Ok(OpenBook {
            pages: vec![page],
            word,
        })
    }

    /// The same open book seen with the opposite orientation: the word is
    /// reversed and every sign flipped, which inverts the monodromy.
    pub fn reversed(&self) -> OpenBook {
        OpenBook {
            pages: self.pages.clone(),
            word: self.word.iter().rev().map(TwistLetter::inverse).collect(),
        }
    }

    /// Same pages and the same homology action on every component.
    pub fn action_equivalent(&self, other: &OpenBook) -> bool {
        self.pages == other.pages
            && match (monodromy_action(self), monodromy_action(other)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
    }
}

/// Homology action of a signed Dehn twist: `x ↦ x + sign·<c, x>·c`.
pub fn transvection_matrix(s: Surface, c: &HomologyClass, sign: Sign) -> Result<IntMatrix> {
    s.check_class(c)?;
    let n = s.h1_rank();
    // row vector c^T J
    let mut cj = vec![0i64; n];
    for i in 1..=s.genus {
        let (a, b) = (s.a_index(i), s.b_index(i));
        cj[b] = c.0[a];
        cj[a] = -c.0[b];
    }
    let mut t = IntMatrix::identity(n);
    let sg = sign.value();
    for i in 0..n {
        if c.0[i] == 0 {
            continue;
        }
        for (j, &w) in cj.iter().enumerate() {
            t[(i, j)] += sg * c.0[i] * w;
        }
    }
    Ok(t)
}

/// Per-component homology action of the monodromy.
pub fn monodromy_action(ob: &OpenBook) -> Result<Vec<IntMatrix>> {
    ob.check()?;
    ob.pages
        .iter()
        .enumerate()
        .map(|(i, &page)| {
            ob.component_word(i)
                .try_fold(IntMatrix::identity(page.h1_rank()), |acc, l| {
                    Ok(&acc * &transvection_matrix(page, &l.curve, l.sign)?)
                })
        })
        .collect()
}

/// Re-expresses a class on `page` in the basis of `variant.stabilized_page(page)`.
///
/// For different bindings the band joins the last two binding circles, so the
/// old class `d_{b-1}` becomes the new `b_{p+1}`.
pub fn embed_class(page: Surface, variant: Variant, c: &HomologyClass) -> HomologyClass {
    let sym = 2 * page.genus as usize;
    match variant {
        Variant::SameBinding => {
            let mut v = c.0.clone();
            v.push(0);
            HomologyClass(v)
        }
        Variant::DifferentBindings => {
            let (symplectic, boundary) = c.0.split_at(sym);
            let (kept, merged) = boundary.split_at(boundary.len() - 1);
            let mut v = symplectic.to_vec();
            v.push(0);
            v.push(merged[0]);
            v.extend_from_slice(kept);
            HomologyClass(v)
        }
    }
}

/// The class whose twist is added by a Hopf stabilization, on the new page.
pub fn stabilizing_class(page: Surface, variant: Variant) -> HomologyClass {
    let new_page = variant.stabilized_page(page);
    match variant {
        Variant::SameBinding => new_page.d(page.boundary),
        Variant::DifferentBindings => new_page.a(page.genus + 1),
    }
}

pub fn hopf_stabilize(ob: &OpenBook, comp: usize, variant: Variant, sign: Sign) -> Result<OpenBook> {
    ob.check()?;
    let page = *ob.pages.get(comp).ok_or(Error::NoSuchComponent {
        index: comp,
        count: ob.pages.len(),
    })?;
    if variant == Variant::DifferentBindings && page.boundary < 2 {
        return Err(Error::SingleBindingCircle { index: comp });
    }
    let mut pages = ob.pages.clone();
    pages[comp] = variant.stabilized_page(page);
    let mut word: Vec<TwistLetter> = ob
        .word
        .iter()
        .map(|l| {
            if l.component == comp {
                TwistLetter {
                    curve: embed_class(page, variant, &l.curve),
                    ..l.clone()
                }
            } else {
                l.clone()
            }
        })
        .collect();
    word.push(TwistLetter::new(comp, stabilizing_class(page, variant), sign));
    Ok(OpenBook { pages, word })
}

/// Checks that the paired components can be identified by an orientation
/// reversing map. With `force` only the page types are compared.
pub fn check_compatible(ob1: &OpenBook, ob2: &OpenBook, pairing: &[(usize, usize)], force: bool) -> Result<()> {
    let mut seen1 = vec![false; ob1.pages.len()];
    let mut seen2 = vec![false; ob2.pages.len()];
    for &(i, j) in pairing {
        let incompatible = |reason: String| Error::Incompatible { x: i, w: j, reason };
        if i >= ob1.pages.len() || j >= ob2.pages.len() {
            return Err(incompatible("index out of range".into()));
        }
        if std::mem::replace(&mut seen1[i], true) {
            return Err(Error::NonInjectivePairing {
                side: "first",
                index: i,
            });
        }
        if std::mem::replace(&mut seen2[j], true) {
            return Err(Error::NonInjectivePairing {
                side: "second",
                index: j,
            });
        }
        if ob1.pages[i] != ob2.pages[j] {
            return Err(incompatible(format!(
                "pages {} and {} differ",
                ob1.pages[i], ob2.pages[j]
            )));
        }
        if force {
            continue;
        }
        let lhs = ob1.component(i)?;
        let rhs = ob2.component(j)?.reversed();
        if monodromy_action(&lhs)? != monodromy_action(&rhs)? {
            return Err(incompatible("monodromy actions differ".into()));
        }
    }
    Ok(())
}

pub fn compatible(ob1: &OpenBook, ob2: &OpenBook, pairing: &[(usize, usize)], force: bool) -> bool {
    check_compatible(ob1, ob2, pairing, force).is_ok()
}
