fn main() {
    std::process::exit(vcpc::cli::main_with_args(std::env::args_os()));
}
