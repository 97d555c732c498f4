fn main() {
    std::process::exit(fde_series::cli::main_with_args(std::env::args_os()));
}
