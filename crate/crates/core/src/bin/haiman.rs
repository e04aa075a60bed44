fn main() {
    std::process::exit(haiman::cli::run());
}
