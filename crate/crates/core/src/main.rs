fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = lctransfer::cli::run(args, &mut std::io::stdin());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
