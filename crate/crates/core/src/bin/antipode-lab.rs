use std::io;

fn main() {
    let code = antipode_lab::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        &mut io::stdin().lock(),
    );
    std::process::exit(code);
}
