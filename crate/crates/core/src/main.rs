fn main() {
    std::process::exit(signed_descent::cli::main_entry());
}
