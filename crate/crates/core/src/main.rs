fn main() {
    std::process::exit(catalecticant::cli::run(std::env::args_os()));
}
