fn main() {
    std::process::exit(syzygy::cli::run(std::env::args_os()));
}
