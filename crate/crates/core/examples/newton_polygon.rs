//! Newton polygon of a plane curve germ and its per-edge branch table.
//!
//! ```bash
//! cargo run -p polar-morse --example newton_polygon
//! ```

use polar_morse::algebra::{parse_polynomial, VariableSet};
use polar_morse::reduction::{branch_table, newton_polygon, PlaneCurveGerm};

pub fn run() -> Result<u32, Box<dyn std::error::Error>> {
    let uv = VariableSet::target_plane();
    // three branches: v = u^2 twice over (distinct coefficients) and v^2 = u^7
    let g = parse_polynomial("(v - u^2)*(v + u^2)*(v^2 - u^7)", &uv)?;
    let germ = PlaneCurveGerm::new(&g)?;
    println!("G = {}", germ.fmt());
    println!("ord_u G(u,0) = {}, ord_v G(0,v) = {}", germ.ord_u0(), germ.ord_0v());
    let poly = newton_polygon(&germ);
    println!("vertices: {:?}", poly.vertices);
    let mut total = 0;
    for row in branch_table(&germ)? {
        println!("  (p, q) = ({}, {}) count {} contributes {}", row.p, row.q, row.count, row.m_delta_total);
        total += row.m_delta_total;
    }
    println!("sum = {total}");
    Ok(total)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
