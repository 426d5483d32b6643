use std::process::exit;

fn main() {
    exit(sumfree::cli::run(std::env::args()));
}
