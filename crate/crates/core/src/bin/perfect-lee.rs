fn main() {
    std::process::exit(perfect_lee::cli::run(std::env::args_os()));
}
