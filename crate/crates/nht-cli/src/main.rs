use std::io::{stderr, stdout};
use std::process::exit;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = nht_cli::run(&args, &mut stdout(), &mut stderr());
    exit(code);
}
