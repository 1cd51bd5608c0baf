//! Scratch probe: run the triple-based algorithms on the fixtures and
//! print their counters.

use involute::engine::{gerdt, invbasis, vargerdt, CriteriaConfig};
use involute::sysfile::parse_system;
use involute::systems::generate_cyclic;
use involute::MonomialOrder;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        vec!["toy", "liu", "noon4", "cyclic5", "katsura5"]
    } else {
        args.iter().map(|s| s.as_str()).collect()
    };

    for name in names {
        let polys = if let Some(n) = name.strip_prefix("cyclic") {
            let n: usize = n.parse().unwrap();
            generate_cyclic(n, MonomialOrder::DegRevLex).1
        } else {
            let path = format!("{}/fixtures/{name}.sys", env!("CARGO_MANIFEST_DIR"));
            parse_system(&std::fs::read_to_string(&path).unwrap())
                .unwrap()
                .polynomials
        };

        let cfg = CriteriaConfig::c1_c2();
        for (label, run) in [
            ("vargerdt", vargerdt(&polys, &cfg, None)),
            ("gerdt", gerdt(&polys, &cfg, None)),
        ] {
            match run {
                Ok(r) => {
                    let s = &r.stats;
                    println!(
                        "{name:10} {label:9} reds={:4} c1={:4} c2={:4} R={:3} deg={:3} size={:4} hp={:3} hw={:3} sel={:5} enq={:5} t={:8.1}ms",
                        s.zero_reductions, s.c1, s.c2, s.rewritten, s.max_degree,
                        s.basis_size, s.head_purged, s.head_rewrapped,
                        s.selected, s.enqueued, s.cpu_ms
                    );
                }
                Err(e) => println!("{name:10} {label:9} TIMEOUT ({:?})", e.stats.cpu_ms),
            }
        }
        if std::env::var("PROBE_INVBASIS").is_ok() {
            match invbasis(&polys, None) {
                Ok(r) => {
                    let s = &r.stats;
                    println!(
                        "{name:10} {:9} reds={:4} deg={:3} size={:4} sel={:5} enq={:5} t={:8.1}ms",
                        "invbasis", s.zero_reductions, s.max_degree, s.basis_size,
                        s.selected, s.enqueued, s.cpu_ms
                    );
                }
                Err(e) => println!("{name:10} {:9} TIMEOUT ({:?})", "invbasis", e.stats.cpu_ms),
            }
        }
    }
}
