// The arc diagram of a tangle: chords, verticals, intersection points, and an SVG rendering.
//
// ```bash
// cargo run -p rtq --example arc_diagram
// ```

use rtq::arcdiagram::{build, emit_svg};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = build("5/2".parse()?)?;
    println!("τ_{} {}", d.fraction, d.state);
    for p in &d.punctures {
        println!("  puncture {:>2} at x = {}", p.role.to_string(), p.x);
    }
    println!("  l_A at x = {}, l_I at x = {}", d.x_a, d.x_i);
    for (k, c) in d.chords.iter().enumerate() {
        let half = if c.face > 0 { "upper" } else { "lower" };
        println!("  chord {k}: {} -> {} ({half})", c.from, c.to);
    }
    println!("  index  vertical  height  arc position");
    for p in &d.xi {
        let v = if p.active { "l_A" } else { "l_I" };
        println!("  ξ{:<5} {v:<9} {:<7} {}", p.index, p.height_rank, p.arc_rank);
    }
    println!("  arc order {:?}, ω = ξ{}", d.arc_order(), d.omega);
    let part = d.partition_xyz()?;
    println!("  capped couples {:?}, remaining {:?}", part.couples, part.z_block);

    let path = std::env::temp_dir().join("rtq-arc-5-2.svg");
    std::fs::write(&path, emit_svg(&d))?;
    println!("wrote {}", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("arc_diagram example");
}
