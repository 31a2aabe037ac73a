fn main() {
    std::process::exit(evoclass::cli::run());
}
