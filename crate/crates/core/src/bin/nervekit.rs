fn main() {
    std::process::exit(nervekit::cli::run(std::env::args_os()));
}
