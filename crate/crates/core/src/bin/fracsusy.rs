fn main() {
    std::process::exit(fracsusy::cli::run(std::env::args_os()));
}
