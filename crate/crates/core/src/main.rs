fn main() {
    std::process::exit(rearr::cli::run(std::env::args_os()));
}
