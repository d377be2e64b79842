//! The ideal engine on its own: reduced bases, elimination, saturation and
//! standard monomials.
//!
//! ```bash
//! cargo run -p polar-morse --example groebner_elimination
//! ```

use polar_morse::algebra::{parse_polynomial, MonomialOrder, VariableSet};
use polar_morse::ideal::{Ideal, IdealEngine};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let vars = VariableSet::new(["x", "y", "t"])?;
    let p = |s: &str| parse_polynomial(s, &vars);
    let engine = IdealEngine::default();

    // twisted cubic, parametrized by t
    let curve = Ideal::new(3, [p("x - t^2")?, p("y - t^3")?]);
    let gb = engine.groebner(&curve, &MonomialOrder::Lex)?;
    println!("lex basis:");
    for g in gb.basis() {
        println!("  {}", g.fmt_with(&vars));
    }
    let elim = engine.eliminate(&curve, &[2])?;
    println!("eliminating t: {}", elim.generators().iter().map(|g| g.fmt_with(&vars)).collect::<Vec<_>>().join(", "));

    // (x*y) : x^∞ = (y)
    let sat = engine.saturate_by(&Ideal::new(3, [p("x*y")?, p("x^2*t")?]), &p("x")?)?;
    println!("(x*y, x^2*t) : x^∞ = ({})", sat.generators().iter().map(|g| g.fmt_with(&vars)).collect::<Vec<_>>().join(", "));

    let xy = VariableSet::new(["x", "y"])?;
    let jac = Ideal::new(2, [parse_polynomial("3*x^2", &xy)?, parse_polynomial("3*y^2", &xy)?]);
    let basis = engine.quotient_basis(&jac)?.ok_or("not zero-dimensional")?;
    println!(
        "Q[x,y]/(3x^2, 3y^2) has basis {{{}}}",
        basis.iter().map(|m| m.fmt_with(&xy)).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
