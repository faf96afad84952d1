//! Free distances of the MDS and unit-memory families, plus the JSON code
//! format read by the command-line tool.

use skewcode::codes::{encoder_from_generator, free_distance, DistanceOptions};
use skewcode::verify::{mds_generator, unit_memory_generator};

fn main() -> skewcode::Result<()> {
    for q in [4u64, 5, 7, 8] {
        let n = q as usize - 1;
        for delta in (1..=3).filter(|&d| d < n) {
            let code = encoder_from_generator(&mds_generator(q, delta)?)?;
            let d = free_distance(&code, DistanceOptions::default())?;
            println!("MDS q={q} δ={delta}: d = {d}, n(δ+1) = {}", n * (delta + 1));
        }
    }
    for (q, k) in [(5u64, 2usize), (7, 3), (8, 3)] {
        let code = encoder_from_generator(&unit_memory_generator(q, k)?)?;
        println!("unit memory q={q} k={k}: d = {}", free_distance(&code, DistanceOptions::default())?);
    }

    let code = encoder_from_generator(&unit_memory_generator(5, 2)?)?;
    println!("{}", serde_json::to_string(&code.to_json()).expect("serializable"));
    match free_distance(&code, DistanceOptions { max_states: 10 }) {
        Ok(d) => println!("{d}"),
        Err(e) => println!("with a tiny state budget: {e}"),
    }
    Ok(())
}
