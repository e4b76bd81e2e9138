//! Indefinite forms come with two exact sign witnesses; the circle oracle is
//! the numeric sanity check behind them.
//!
//!     cargo run --example witnesses

use quartic_certify::classifier::{circle_min_estimate, witness_search};
use quartic_certify::exactnum::rat;
use quartic_certify::forms::{evaluate, MonicQuartic};

fn main() {
    let forms = [
        (
            "(x^2 - y^2)(x^2 - 4y^2)",
            MonicQuartic::from_ints(0, -5, 0, 4),
        ),
        ("x^4 - 3x^2y^2 + y^4", MonicQuartic::from_ints(0, -3, 0, 1)),
        // Barely negative in a thin sector near the y axis.
        (
            "x^4 + xy^3/1000",
            MonicQuartic::new(rat(0, 1), rat(0, 1), rat(1, 1000), rat(0, 1)),
        ),
        ("x^4 + y^4", MonicQuartic::from_ints(0, 0, 0, 1)),
    ];
    for (name, m) in forms {
        let est = circle_min_estimate(&m, 4096);
        print!(
            "{name}: circle min {:.3e} at theta {:.4}; ",
            est.min, est.theta
        );
        match witness_search(&m) {
            Ok(w) => {
                let (px, py) = &w.positive;
                let (nx, ny) = &w.negative;
                println!(
                    "f({px}, {py}) = {} > 0, f({nx}, {ny}) = {} < 0",
                    evaluate(&m, px, py),
                    evaluate(&m, nx, ny)
                );
            }
            Err(e) => println!("{e}"),
        }
    }
}
