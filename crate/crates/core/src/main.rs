fn main() {
    let code = sedgraph::cli::run(std::env::args_os());
    std::process::exit(code);
}
