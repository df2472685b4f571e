fn main() {
    std::process::exit(qcsd::cli::main());
}
