fn main() {
    std::process::exit(pigraph::cli::run(std::env::args()));
}
