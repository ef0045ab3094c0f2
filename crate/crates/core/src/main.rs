fn main() {
    std::process::exit(distdom::cli::main());
}
