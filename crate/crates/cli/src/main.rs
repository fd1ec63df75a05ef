fn main() {
    std::process::exit(injcolor_cli::run(std::env::args_os()));
}
