//! Drive the whole verification surface through the CLI entry point, the
//! same way the installed binary does it, and collect the reports.

use sumfree::cli::run_with;

fn main() {
    let args = [
        "sumfree",
        "verify",
        "--suite",
        "all",
        "--subst",
        "3,0,5",
        "--n",
        "64",
        "--scale",
        "4",
        "--b",
        "2",
        "--horizon",
        "8000",
        "--depth",
        "4",
        "--window",
        "32",
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(args.iter().map(|s| s.to_string()), &mut out, &mut err);

    print!("{}", String::from_utf8(out).unwrap());
    eprint!("{}", String::from_utf8(err).unwrap());
    println!("exit code: {code}");
    assert_eq!(code, 0);
}
