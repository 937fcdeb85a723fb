fn main() {
    std::process::exit(stablegb::cli::run());
}
