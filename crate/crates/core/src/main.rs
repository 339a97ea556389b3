fn main() {
    std::process::exit(mlst_core::cli::run(std::env::args_os()));
}
