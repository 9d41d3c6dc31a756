fn main() {
    std::process::exit(lnd::cli::run());
}
