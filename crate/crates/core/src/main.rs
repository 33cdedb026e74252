fn main() {
    std::process::exit(fcd_core::cli::run_cli(std::env::args_os()));
}
