fn main() {
    std::process::exit(excludant::cli::run(std::env::args_os()));
}
