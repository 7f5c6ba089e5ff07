fn main() {
    std::process::exit(gsdsim::cli::main_with_args(std::env::args_os()));
}
