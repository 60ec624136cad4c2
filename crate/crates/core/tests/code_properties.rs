//! Code invariants against exhaustive enumeration.

use agmds::code::{
    dual_code, hull_dim, invariant_report, mds_check_matrix, min_distance, schur_square,
    singular_minor, LinearCode, DEFAULT_BUDGET,
};
use agmds::export::{export_code, import_json, import_matrix_text, ExportFormat};
use agmds::field::{FieldElement, FiniteField};
use agmds::linalg::Matrix;
use proptest::prelude::*;

fn all_codewords(code: &LinearCode) -> Vec<Vec<FieldElement>> {
    let f = code.field();
    let q = f.order() as usize;
    let k = code.k();
    (0..q.pow(k as u32))
        .map(|mut i| {
            let msg: Vec<FieldElement> = (0..k)
                .map(|_| {
                    let c = f.element((i % q) as u32).unwrap();
                    i /= q;
                    c
                })
                .collect();
            code.encode(&msg)
        })
        .collect()
}

fn dot(f: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

fn small_code() -> impl Strategy<Value = LinearCode> {
    (
        prop::sample::select(vec![2u64, 3, 4, 5, 7]),
        2usize..=6,
        1usize..=3,
    )
        .prop_flat_map(|(q, n, k)| {
            let k = k.min(n);
            prop::collection::vec(0..q as u32, n * k).prop_map(move |data| {
                let f = FiniteField::with_order(q).unwrap();
                let rows: Vec<Vec<FieldElement>> = data
                    .chunks(n)
                    .map(|r| r.iter().map(|&c| f.element(c).unwrap()).collect())
                    .collect();
                LinearCode::spanned_by(&Matrix::from_rows(&f, n, &rows))
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn distance_and_mds_match_enumeration(code in small_code()) {
        prop_assume!(code.k() > 0);
        let words = all_codewords(&code);
        let brute = words
            .iter()
            .map(|w| w.iter().filter(|c| !c.is_zero()).count())
            .filter(|&w| w > 0)
            .min()
            .unwrap();
        prop_assert_eq!(min_distance(&code, DEFAULT_BUDGET).unwrap(), brute);
        let mds = brute == code.n() - code.k() + 1;
        prop_assert_eq!(mds_check_matrix(&code, DEFAULT_BUDGET).unwrap(), mds);
        prop_assert_eq!(singular_minor(&code, DEFAULT_BUDGET).unwrap().is_none(), mds);
        prop_assert_eq!(invariant_report(&code, DEFAULT_BUDGET).d, Some(brute));
    }

    #[test]
    fn dual_and_hull_match_enumeration(code in small_code()) {
        prop_assume!(code.k() > 0);
        let f = code.field().clone();
        let dual = dual_code(&code);
        prop_assert_eq!(dual.k() + code.k(), code.n());
        let words = all_codewords(&code);
        for d in dual.generator().row_vecs() {
            for w in &words {
                prop_assert!(dot(&f, w, &d).is_zero());
            }
        }
        // hull = words orthogonal to every generator row
        let rows = code.generator().row_vecs();
        let in_hull = words
            .iter()
            .filter(|w| rows.iter().all(|r| dot(&f, w, r).is_zero()))
            .count();
        let q = f.order() as usize;
        prop_assert_eq!(q.pow(hull_dim(&code) as u32), in_hull);
    }

    #[test]
    fn schur_square_spans_products(code in small_code()) {
        prop_assume!(code.k() > 0);
        let f = code.field().clone();
        let rows = code.generator().row_vecs();
        let mut products = Vec::new();
        for a in &rows {
            for b in &rows {
                products.push(a.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect::<Vec<_>>());
            }
        }
        let span = Matrix::from_rows(&f, code.n(), &products).rank();
        prop_assert_eq!(schur_square(&code).k(), span);
    }

    #[test]
    fn export_round_trip(code in small_code()) {
        for fmt in [ExportFormat::MatrixText, ExportFormat::Json] {
            let text = export_code(&code, fmt);
            let back = match fmt {
                ExportFormat::MatrixText => import_matrix_text(&text).unwrap(),
                ExportFormat::Json => import_json(&text).unwrap(),
            };
            prop_assert_eq!(export_code(&back, fmt), text);
            prop_assert_eq!(back.generator(), code.generator());
        }
    }
}
