//! Random generators and independent oracles shared by the integration suites.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tricalc_core::{
    HomologyClass, IntMatrix, LefschetzFibration, OpenBook, RelativeTrisection, Sign, Surface, TriMorphism, Trisection,
    VanishingCycle,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sign<R: Rng>(r: &mut R) -> Sign {
    if r.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

pub fn surface<R: Rng>(r: &mut R, max_genus: u32, max_boundary: u32) -> Surface {
    Surface::new(r.gen_range(0..=max_genus), r.gen_range(0..=max_boundary))
}

pub fn page<R: Rng>(r: &mut R) -> Surface {
    Surface::new(r.gen_range(0..=2), r.gen_range(1..=3))
}

pub fn class<R: Rng>(r: &mut R, s: Surface) -> HomologyClass {
    HomologyClass((0..s.h1_rank()).map(|_| r.gen_range(-3..=3)).collect())
}

pub fn nonzero_class<R: Rng>(r: &mut R, s: Surface) -> HomologyClass {
    assert!(s.h1_rank() > 0);
    loop {
        let c = class(r, s);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn open_book<R: Rng>(r: &mut R, page: Surface) -> OpenBook {
    let len = r.gen_range(0..=3);
    let twists = (0..len).map(|_| (class(r, page), sign(r))).collect();
    OpenBook::single(page, twists).unwrap()
}

/// A valid relative trisection with the given boundary books.
pub fn trisection_with<R: Rng>(r: &mut R, books: Vec<OpenBook>) -> RelativeTrisection {
    let m = books.len() as u32;
    let p: u32 = books.iter().map(|b| b.pages[0].genus).sum();
    let b: u32 = books.iter().map(|b| b.pages[0].boundary).sum();
    let g_base = p + r.gen_range(0..=3);
    let s = r.gen_range(0..=3);
    RelativeTrisection::new(g_base + s, b, g_base + b + p - m, books).unwrap()
}

pub fn trisection<R: Rng>(r: &mut R) -> RelativeTrisection {
    let m = r.gen_range(1..=3);
    let books = (0..m).map(|_| {
        let pg = page(r);
        open_book(r, pg)
    });
    let books = books.collect();
    trisection_with(r, books)
}

pub fn closed<R: Rng>(r: &mut R) -> Trisection {
    let k = r.gen_range(0..=4);
    Trisection::Closed(tricalc_core::ClosedTrisection::new(k + r.gen_range(0..=4), k).unwrap())
}

/// Both trisections plus a pairing whose open books are compatible.
pub fn compatible_pair<R: Rng>(r: &mut R) -> (RelativeTrisection, RelativeTrisection, Vec<(usize, usize)>) {
    let x = trisection(r);
    let mut x_idx: Vec<usize> = (0..x.m()).collect();
    x_idx.shuffle(r);
    let glued = r.gen_range(1..=x.m());
    x_idx.truncate(glued);

    let extra = r.gen_range(0..=2);
    let mut w_books: Vec<Option<usize>> = x_idx.iter().map(|&i| Some(i)).collect();
    w_books.extend((0..extra).map(|_| None));
    w_books.shuffle(r);

    let mut pairs = Vec::new();
    let books = w_books
        .iter()
        .enumerate()
        .map(|(j, slot)| match slot {
            Some(i) => {
                pairs.push((*i, j));
                x.boundary[*i].reversed()
            }
            None => {
                let pg = page(r);
                open_book(r, pg)
            }
        })
        .collect();
    let w = trisection_with(r, books);
    (x, w, pairs)
}

/// A morphism whose source components carry `sources` in order, followed by
/// `targets` fresh target components, all interleaved at random.
pub fn morphism<R: Rng>(r: &mut R, sources: &[OpenBook], targets: usize) -> TriMorphism {
    let total = sources.len() + targets;
    let mut is_source = vec![true; sources.len()];
    is_source.extend(vec![false; targets]);
    is_source.shuffle(r);
    let mut src = sources.iter();
    let mut source_idx = Vec::new();
    let books = is_source
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if s {
                source_idx.push(i);
                src.next().unwrap().clone()
            } else {
                let pg = page(r);
                open_book(r, pg)
            }
        })
        .collect::<Vec<_>>();
    assert_eq!(books.len(), total);
    let t = trisection_with(r, books);
    TriMorphism::new(t.into(), source_idx).unwrap()
}

pub fn lefschetz<R: Rng>(r: &mut R) -> LefschetzFibration {
    let fiber = Surface::new(r.gen_range(0..=2), r.gen_range(1..=3));
    let n = if fiber.h1_rank() == 0 { 0 } else { r.gen_range(0..=4) };
    let cycles = (0..n)
        .map(|_| VanishingCycle::new(nonzero_class(r, fiber), sign(r)))
        .collect();
    LefschetzFibration::new(fiber, cycles).unwrap()
}

pub fn matrix<R: Rng>(r: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = r.gen_range(0..=max_dim);
    let cols = r.gen_range(0..=max_dim);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| r.gen_range(-bound..=bound)).collect())
        .collect();
    if rows == 0 {
        return IntMatrix::zeros(0, cols);
    }
    IntMatrix::from_rows(&data)
}

/// χ by inclusion–exclusion over the three pieces, their pairwise
/// intersections and the central surface. Each pairwise intersection is a
/// compression body from the central surface down to the pages; its handle
/// count is read off from Euler characteristics of the two ends.
pub fn euler_by_inclusion_exclusion(t: &RelativeTrisection) -> i64 {
    let chi_central = 2 - 2 * i64::from(t.surface_genus) - i64::from(t.surface_boundary);
    let chi_pages: i64 = t
        .boundary
        .iter()
        .map(|b| 2 - 2 * i64::from(b.pages[0].genus) - i64::from(b.pages[0].boundary))
        .sum();
    let diff = chi_pages - chi_central;
    assert!(
        diff >= 0 && diff % 2 == 0,
        "pages are not a compression of the central surface"
    );
    let compressions = diff / 2;
    let chi_piece = 1 - i64::from(t.k);
    let chi_intersection = chi_central + compressions;
    3 * chi_piece - 3 * chi_intersection + chi_central
}

fn leibniz(m: &[Vec<i128>]) -> i128 {
    fn rec(m: &[Vec<i128>], row: usize, used: &mut Vec<bool>) -> i128 {
        if row == m.len() {
            return 1;
        }
        let mut total = 0;
        let mut parity = 1;
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            used[col] = true;
            total += parity * m[row][col] * rec(m, row + 1, used);
            used[col] = false;
            parity = -parity;
        }
        total
    }
    rec(m, 0, &mut vec![false; m.len()])
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            s
        })
        .collect();
    with.extend(subsets(n - 1, k));
    with
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors from determinantal divisors: `D_k` is the gcd of all
/// `k × k` minors and `d_k = D_k / D_{k-1}`.
pub fn invariant_factors_by_minors(a: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i128> {
    let mut factors = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut d = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| i128::from(a[i][j])).collect())
                    .collect();
                d = gcd(d, leibniz(&minor));
            }
        }
        if d == 0 {
            break;
        }
        factors.push(d / prev);
        prev = d;
    }
    factors
}

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| i64::try_from(&m[(i, j)]).unwrap()).collect())
        .collect()
}
