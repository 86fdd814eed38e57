//! Thin entry point for the `rtq` command line; see [`rtq::cli`].

fn main() {
    let code = rtq::cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
