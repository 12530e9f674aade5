fn main() {
    std::process::exit(bendtrop::cli::main_with_args(std::env::args_os()));
}
