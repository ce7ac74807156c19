#![allow(dead_code)]

use pencil_fibers::field::Q;
use pencil_fibers::io::{parse_form, parse_input};
use pencil_fibers::{MultiPoly, NumberField, Pencil};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GOLDEN: &str = include_str!("../data/golden.toml");
pub const GOLDEN_SQRT5: &str = include_str!("../data/golden_sqrt5.toml");

/// `√5` in the golden field `Q(t)`, `t⁴ − 14t² + 9 = 0`.
pub const SQRT5: &str = "((17*t-t^3)/6)";

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn golden_pencil() -> Pencil {
    parse_input(GOLDEN).unwrap().pencil
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn sqrt5_field() -> NumberField {
    NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap()
}

/// A form written with `s` standing for `√5`, read in the golden field.
pub fn golden_form(k: &NumberField, text: &str) -> MultiPoly {
    parse_form(&text.replace('s', SQRT5), k).unwrap()
}

pub fn form(k: &NumberField, text: &str) -> MultiPoly {
    parse_form(text, k).unwrap()
}

fn random_element(k: &NumberField, rng: &mut ChaCha8Rng) -> pencil_fibers::FieldElement {
    let coords = (0..k.degree()).map(|i| q(if i == 0 { rng.gen_range(-4..=4) } else { rng.gen_range(-1..=1) })).collect();
    k.from_coords(coords)
}

/// A random line `aX + bY + cZ` with small coefficients.
pub fn random_line(k: &NumberField, rng: &mut ChaCha8Rng) -> MultiPoly {
    loop {
        let l = MultiPoly::from_terms(
            k,
            3,
            (0..3).map(|i| {
                let mut e = [0; 3];
                e[i] = 1;
                (pencil_fibers::poly::Monomial(e), random_element(k, rng))
            }),
        );
        if !l.is_zero() {
            return l;
        }
    }
}

/// Pencils spanned by two products of lines: every base point is an
/// intersection of two lines, so it is rational over the field.
pub fn random_line_pencils(k: &NumberField, count: usize, seed: u64) -> Vec<(String, Pencil)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(1..=3);
        let f = (0..d).fold(MultiPoly::one(k, 3), |acc, _| acc.mul(&random_line(k, &mut rng)));
        let g = (0..d).fold(MultiPoly::one(k, 3), |acc, _| acc.mul(&random_line(k, &mut rng)));
        let Ok(p) = Pencil::new(f.clone(), g.clone()) else { continue };
        if !pencil_fibers::base_points::form_gcd(&f, &g).is_constant() {
            continue;
        }
        out.push((format!("random lines #{} over {}", out.len(), k.describe()), p));
    }
    out
}

/// Hand-built pencils with rational base points, including infinitely near
/// and satellite points.
pub fn hand_built_pencils() -> Vec<(String, Pencil)> {
    let k = NumberField::rationals();
    let k5 = sqrt5_field();
    let specs: Vec<(&NumberField, &str, &str)> = vec![
        (&k, "X", "Y"),
        (&k, "X*Y", "Z^2"),
        (&k, "X^2", "Y^2"),
        (&k, "X^3", "Y^3"),
        (&k, "Y^2*Z-X^3", "Y^2*Z"),
        (&k, "X^2*Y", "Z^3"),
        (&k, "Y*Z-X^2", "X*Y"),
        (&k, "Y*Z-X^2", "Y^2"),
        (&k, "X*(X-Z)*(X+Z)", "Y*(Y-Z)*(Y+Z)"),
        (&k, "Y^2*Z-X^3-X^2*Z", "X^2*Z"),
        (&k5, "X^2-5*Y^2", "Z*(X-Y)"),
        (&k5, "(X-r*Y)*Z", "X*Y-r*Z^2"),
    ];
    specs
        .into_iter()
        .map(|(k, f, g)| {
            let p = Pencil::new(form(k, f), form(k, g)).unwrap();
            (format!("({f}, {g}) over {}", k.describe()), p)
        })
        .collect()
}
