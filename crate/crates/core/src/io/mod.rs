//! Input parsing, output serialization and the command-line runner.

mod document;
mod output;
mod parse;
mod run;

pub use document::{load_input, parse_input, InputDocument};
pub use output::{render_text, OutputDocument};
pub use parse::{parse_form, parse_polynomial};
pub use run::{exit_code, run, RunArgs};

use crate::field::Field;
use crate::poly::MultiPoly;

/// Prints a polynomial in `X, Y, Z` so that [`parse_form`] reads it back
/// exactly, e.g. `X+(-7/2*r-17/2)*Y`.
pub fn format_poly(p: &MultiPoly) -> String {
    format_poly_with(p, &["X", "Y", "Z"])
}

/// As [`format_poly`] with custom variable names.
pub fn format_poly_with(p: &MultiPoly, vars: &[&str]) -> String {
    let k = p.field();
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let mono: Vec<String> = (0..p.nvars())
            .filter(|&i| m.0[i] > 0)
            .map(|i| match m.0[i] {
                1 => vars[i].to_string(),
                e => format!("{}^{e}", vars[i]),
            })
            .collect();
        let mono = mono.join("*");
        let term = match c.as_rational() {
            Some(r) if mono.is_empty() => crate::field::format_rational(r),
            Some(_) if k.is_one(c) => mono,
            Some(_) if k.is_one(&k.neg(c)) => format!("-{mono}"),
            Some(r) => format!("{}*{mono}", crate::field::format_rational(r)),
            None if mono.is_empty() => format!("({})", k.format(c)),
            None => format!("({})*{mono}", k.format(c)),
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, NumberField};
    use crate::poly::Monomial;
    use proptest::prelude::*;

    #[test]
    fn formats() {
        let k = NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap();
        let c = k.from_coords(vec![q(-17) / q(2), q(-7) / q(2)]);
        let p = MultiPoly::from_terms(
            &k,
            3,
            [(Monomial([1, 0, 0]), k.one()), (Monomial([0, 1, 0]), c), (Monomial([0, 0, 1]), k.from_int(-2))],
        );
        assert_eq!(format_poly(&p), "X+(-7/2*r-17/2)*Y-2*Z");
        assert_eq!(format_poly(&MultiPoly::zero(&k, 3)), "0");
    }

    fn arb_form() -> impl Strategy<Value = MultiPoly> {
        let k = NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap();
        (1u32..4, prop::collection::vec((-20i64..20, -20i64..20, 1i64..5), 10)).prop_map(move |(d, cs)| {
            let monos = Monomial::all_of_degree(d, 3);
            let terms = monos.into_iter().zip(cs).map(|(m, (a, b, den))| {
                let c = k.from_coords(vec![q(a) / q(den), q(b) / q(den)]);
                (m, c)
            });
            MultiPoly::from_terms(&k, 3, terms)
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(p in arb_form()) {
            prop_assume!(!p.is_zero());
            let text = format_poly(&p);
            let back = parse_form(&text, p.field()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
