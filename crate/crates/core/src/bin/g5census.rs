fn main() {
    std::process::exit(g5census::cli::main_with(std::env::args_os()));
}
