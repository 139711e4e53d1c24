fn main() {
    let mut stdout = std::io::stdout().lock();
    std::process::exit(tokbin::cli::main_with(std::env::args_os(), &mut stdout));
}
