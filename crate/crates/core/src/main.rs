fn main() {
    std::process::exit(dseidel::cli::run(std::env::args_os()));
}
