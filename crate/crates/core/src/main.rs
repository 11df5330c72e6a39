use std::io;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = indset::cli::run(&argv, &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
