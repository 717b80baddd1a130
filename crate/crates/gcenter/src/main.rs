fn main() {
    std::process::exit(gcenter::cli::main_with_args(std::env::args_os()));
}
