use ssb::relations as r;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("all");
    let run = |name: &str, f: &dyn Fn() -> Result<Vec<r::DerivationScript>, r::RelError>| {
        let t = Instant::now();
        match f() {
            Ok(scripts) => {
                for (k, s) in scripts.iter().enumerate() {
                    let v = r::check_derivation(s);
                    println!(
                        "{name}[{k}] {} steps, valid={:?} ({:?})",
                        s.steps.len(),
                        v.is_valid(),
                        t.elapsed()
                    );
                }
            }
            Err(e) => println!("{name} FAILED after {:?}: {e}", t.elapsed()),
        }
    };
    if which == "all" || which == "r" {
        run("reduced", &|| r::reduced_relation_chains(1, 4));
    }
    if which == "all" || which == "m" {
        run("induct", &|| r::two_vertex_induction_chains(2, 5));
    }
}
