use std::fs;

use agmds::catalog::{Catalog, CatalogEntry};
use agmds::constructions::{coset_recipe, sqrt_p_length, RecipeOptions};
use agmds::field::FiniteField;

fn entries() -> (CatalogEntry, CatalogEntry) {
    let f = FiniteField::prime(19).unwrap();
    let a = coset_recipe(&f, 24, 6, 3, &RecipeOptions::default()).unwrap();
    let b = sqrt_p_length(19, 2, true, &RecipeOptions::default()).unwrap();
    (
        CatalogEntry::from_certified(&a),
        CatalogEntry::from_certified(&b),
    )
}

#[test]
fn ids_ignore_the_timestamp() {
    let (a, b) = entries();
    assert_ne!(a.id, b.id);
    assert_eq!(a.id.len(), 64);
    let stamped = CatalogEntry {
        created: Some("2026-01-01T00:00:00Z".into()),
        ..a.clone()
    };
    assert_eq!(stamped.content_id(), a.id);
    let mut changed = a.clone();
    changed.construction.seed = 7;
    assert_ne!(changed.content_id(), a.id);
}

#[test]
fn store_is_idempotent_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cat = Catalog::new(dir.path().join("codes.jsonl"));
    assert!(cat.load().unwrap().is_empty());
    let (a, b) = entries();
    assert!(cat.store(&a).unwrap());
    let once = fs::read(cat.path()).unwrap();
    assert!(!cat.store(&a).unwrap());
    assert_eq!(fs::read(cat.path()).unwrap(), once);
    assert!(cat.store(&b).unwrap());
    let loaded = cat.load().unwrap();
    assert_eq!(loaded, vec![a.clone(), b]);
    assert_eq!(fs::read_to_string(cat.path()).unwrap().lines().count(), 2);
    assert_eq!(cat.find(&a.id[..10]).unwrap(), vec![a]);
}

#[test]
fn corrupt_lines_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("codes.jsonl");
    let (a, b) = entries();
    fs::write(
        &path,
        format!("{}\n{{\"id\": \"trunc", serde_json::to_string(&a).unwrap()),
    )
    .unwrap();
    let cat = Catalog::new(&path);
    assert_eq!(cat.load().unwrap(), vec![a]);
    assert!(cat.store(&b).unwrap());
    let loaded = cat.load().unwrap();
    assert_eq!(loaded.len(), 2);
    assert_eq!(loaded[1], b);
}

#[test]
fn rebuilding_reproduces_the_matrix() {
    let (a, _) = entries();
    let (again, _) = entries();
    assert_eq!(a, again);
    assert_eq!(a.matrix.len(), 3);
    assert_eq!(a.report.d, Some(4));
}
