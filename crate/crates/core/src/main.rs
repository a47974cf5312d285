fn main() {
    std::process::exit(latin_hadamard::cli::run(std::env::args_os()));
}
