fn main() {
    std::process::exit(cloneforge::run(std::env::args_os()));
}
