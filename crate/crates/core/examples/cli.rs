//! Driving the command-line surface in-process.

use combhopf::cli::execute;

fn main() {
    for args in [
        &["eval", "F[12]*F[1]"][..],
        &["--format", "json", "eval", "qmul(F[1], F[1])"],
        &["report", "hilbert", "mqsym", "5"],
        &["--format", "dot", "report", "quiver", "4"],
        &["report", "hilbert", "mqsym", "20"],
    ] {
        let out = execute(std::iter::once("combhopf").chain(args.iter().copied()));
        println!("$ combhopf {} (exit {})", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
