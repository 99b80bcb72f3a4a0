fn main() {
    std::process::exit(resolv251::cli::run(std::env::args().skip(1).collect()));
}
