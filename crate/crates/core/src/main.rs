fn main() {
    std::process::exit(xmodcat::cli::main_from_env());
}
