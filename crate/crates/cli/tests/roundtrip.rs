use proptest::prelude::*;

use tricalc_cli::{parse, serialize, Document};
use tricalc_core::{
    ClosedTrisection, HomologyClass, LefschetzFibration, OpenBook, RelativeTrisection, Sign, Surface, TwistLetter,
    VanishingCycle,
};

fn surface() -> impl Strategy<Value = Surface> {
    (0u32..3, 0u32..4).prop_map(|(g, b)| Surface::new(g, b))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

fn twists(page: Surface) -> impl Strategy<Value = Vec<(HomologyClass, Sign)>> {
    let class = prop::collection::vec(-5i64..=5, page.h1_rank()).prop_map(HomologyClass);
    prop::collection::vec((class, sign()), 0..4)
}

fn book(page: Surface, component: usize) -> impl Strategy<Value = (Surface, Vec<TwistLetter>)> {
    twists(page).prop_map(move |w| {
        let word = w.into_iter().map(|(c, s)| TwistLetter::new(component, c, s)).collect();
        (page, word)
    })
}

fn single_books() -> impl Strategy<Value = Vec<OpenBook>> {
    prop::collection::vec(surface().prop_flat_map(|s| book(s, 0)), 0..4).prop_map(|bs| {
        bs.into_iter()
            .map(|(p, word)| OpenBook { pages: vec![p], word })
            .collect()
    })
}

fn relative() -> impl Strategy<Value = RelativeTrisection> {
    (0u32..8, 0u32..8, 0u32..8, single_books()).prop_map(|(g, b, k, boundary)| RelativeTrisection {
        surface_genus: g,
        surface_boundary: b,
        k,
        boundary,
    })
}

fn open_book() -> impl Strategy<Value = OpenBook> {
    prop::collection::vec(surface(), 1..4).prop_flat_map(|pages| {
        let parts: Vec<_> = pages.iter().enumerate().map(|(i, &p)| book(p, i)).collect();
        (Just(pages), parts, any::<u64>()).prop_map(|(pages, parts, seed)| {
            let mut word: Vec<TwistLetter> = parts.into_iter().flat_map(|(_, w)| w).collect();
            if !word.is_empty() {
                let n = word.len();
                word.rotate_left((seed as usize) % n);
            }
            OpenBook { pages, word }
        })
    })
}

fn document() -> impl Strategy<Value = Document> {
    prop_oneof![
        relative().prop_map(Document::Trisection),
        (0u32..10, 0u32..10).prop_map(|(g, k)| Document::Closed(ClosedTrisection { g, k })),
        open_book().prop_map(Document::OpenBook),
        surface()
            .prop_flat_map(|f| (Just(f), twists(f)))
            .prop_map(|(fiber, t)| Document::Lefschetz(LefschetzFibration {
                fiber,
                cycles: t.into_iter().map(|(c, s)| VanishingCycle::new(c, s)).collect(),
            })),
        (relative(), prop::collection::vec(0usize..6, 0..4))
            .prop_map(|(trisection, source)| Document::Morphism { trisection, source }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_inverts_serialize(doc in document()) {
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }
}

#[test]
fn compact_input_reserializes_canonically() {
    let compact = r#"{"kind":"closed","g":3,"k":1}"#;
    assert_eq!(
        serialize(&parse(compact).unwrap()),
        "{\n  \"kind\": \"closed\",\n  \"g\": 3,\n  \"k\": 1\n}\n"
    );
}
