use std::io;

fn main() {
    let code = catalan_hankel::cli::parse_and_dispatch(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
