//! Quiver algebras from JSON and in code.

use std::path::Path;

use syzygy::algebra::{Algebra, Arrow, QuiverPresentation};
use syzygy::linalg::Field;
use syzygy::pipeline::read_algebra_file;
use syzygy::Result;

pub fn run_example() -> Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let kt2 = read_algebra_file(&dir.join("kt2.json"))?.source()?.build()?;
    println!("kt2: basis {:?}, loewy length {}", kt2.labels(), kt2.loewy_length());

    // a -> b -> c with the composite zero
    let q = QuiverPresentation {
        field: Field::prime(3)?,
        vertices: vec!["1".into(), "2".into(), "3".into()],
        arrows: vec![
            Arrow {
                name: "a".into(),
                from: 0,
                to: 1,
            },
            Arrow {
                name: "b".into(),
                from: 1,
                to: 2,
            },
        ],
        relations: vec![vec![syzygy::algebra::RelationTerm {
            path: vec!["a".into(), "b".into()],
            coeff: Field::prime(3)?.one(),
        }]],
        cap: 6,
    };
    let a = Algebra::from_quiver(&q)?;
    println!("A3 mod rad^2: basis {:?}, cartan {:?}", a.labels(), a.cartan_matrix());
    assert_eq!(a.dim(), 5);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
