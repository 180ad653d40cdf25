//! Tilings of the plane by the anticode S'_{2,R} from diagonal strips, one
//! strip per term of a sequence over Z_{R+1}.

use perfect_lee::error::Limits;
use perfect_lee::tilings::{
    axis_period_probe, sequence_report, strip_set_for_window, tiling_periodicity_probe,
    verify_window_tiling, SequenceGenerator, Window,
};

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    let window = Window::cube(2, 0, 200)?;
    for radius in 1..=2 {
        for generator in [
            SequenceGenerator::Constant(0),
            SequenceGenerator::Fibonacci,
            SequenceGenerator::Random(5),
        ] {
            let set = strip_set_for_window(generator, radius, &window.grown(20))?;
            let report = verify_window_tiling(&set, &window, &limits)?;
            let probe = tiling_periodicity_probe(&set, &window, 20, &limits)?;
            let axis = axis_period_probe(&set, &window, 50, &limits)?;
            println!(
                "R={radius} {generator:?}: exact cover={} centers={} periods<=20: {} (first {:?}), axis periods<=50: {}",
                report.exact_cover,
                report.centers,
                probe.survivors.len(),
                probe.survivors.iter().find(|v| v[0] > 0),
                axis.survivors.len()
            );
        }
    }

    let seq = SequenceGenerator::Fibonacci.generate(1, 0, 1000)?;
    let rep = sequence_report(&seq, 0, 1000)?;
    println!(
        "Fibonacci word over 1000 indices: non-periodic={} (shifts up to {})",
        rep.nonperiodic, rep.max_shift
    );

    // A small picture: centers as 'o', with R=1.
    let small = Window::cube(2, 0, 24)?;
    let set = strip_set_for_window(SequenceGenerator::Fibonacci, 1, &small)?;
    let centers = set.centers_in(&small, &limits)?;
    for y in (0..24).rev() {
        let row: String = (0..24)
            .map(|x| {
                if centers.contains(&vec![x, y]) {
                    'o'
                } else {
                    '.'
                }
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}
