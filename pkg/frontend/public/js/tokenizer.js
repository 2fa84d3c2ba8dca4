/**
 * Client-side mirror of the expression-language lexer, used only for
 * presentation: syntax colors, bracket matching and picking the fragment
 * under the cursor for completion.  It never evaluates anything.
 */
const OPERATORS = new Set(["+", "-", "*", "/", "^", "="]);
const OPEN = "([{";
const CLOSE = ")]}";
const PAIRS = {
    ")": "(",
    "]": "[",
    "}": "{",
    "(": ")",
    "[": "]",
    "{": "}",
};
function isDigit(ch) {
    return ch >= "0" && ch <= "9";
}
function isWordStart(ch) {
    return /[A-Za-z_]/.test(ch);
}
function isWord(ch) {
    return /[A-Za-z0-9_]/.test(ch);
}
/** Split source text into display tokens; every character is covered. */
export function tokenize(source) {
    const out = [];
    let i = 0;
    const n = source.length;
    const push = (cls, start, end) => out.push({ cls, text: source.slice(start, end), start, end });
    while (i < n) {
        const ch = source[i];
        if (ch === " " || ch === "\t" || ch === "\r" || ch === "\n") {
            let j = i + 1;
            while (j < n && " \t\r\n".includes(source[j]))
                j++;
            push("whitespace", i, j);
            i = j;
            continue;
        }
        if (ch === "/" && source[i + 1] === "/") {
            let j = source.indexOf("\n", i);
            if (j === -1)
                j = n;
            push("comment", i, j);
            i = j;
            continue;
        }
        if (ch === '"') {
            let j = i + 1;
            while (j < n && source[j] !== '"' && source[j] !== "\n")
                j++;
            if (j < n && source[j] === '"')
                j++;
            push("string", i, j);
            i = j;
            continue;
        }
        if (ch === "$") {
            let j = i + 1;
            while (j < n && isWord(source[j]))
                j++;
            push(j > i + 1 ? "variable" : "unknown", i, j);
            i = j;
            continue;
        }
        if (isDigit(ch) || (ch === "." && isDigit(source[i + 1] ?? ""))) {
            let j = i;
            while (j < n && isDigit(source[j]))
                j++;
            if (source[j] === "." && isDigit(source[j + 1] ?? "")) {
                j++;
                while (j < n && isDigit(source[j]))
                    j++;
            }
            if (source[j] === "e" || source[j] === "E") {
                let k = j + 1;
                if (source[k] === "+" || source[k] === "-")
                    k++;
                if (isDigit(source[k] ?? "")) {
                    k++;
                    while (k < n && isDigit(source[k]))
                        k++;
                    j = k;
                }
            }
            push("number", i, j);
            i = j;
            continue;
        }
        if (isWordStart(ch)) {
            let j = i + 1;
            while (j < n && isWord(source[j]))
                j++;
            const word = source.slice(i, j).toLowerCase();
            push(word === "true" || word === "false" ? "boolean" : "identifier", i, j);
            i = j;
            continue;
        }
        if (OPERATORS.has(ch)) {
            push("operator", i, i + 1);
            i++;
            continue;
        }
        if (OPEN.includes(ch) || CLOSE.includes(ch) || ch === ",") {
            push("delimiter", i, i + 1);
            i++;
            continue;
        }
        if (ch === "%") {
            push("continuation", i, i + 1);
            i++;
            continue;
        }
        push("unknown", i, i + 1);
        i++;
    }
    return out;
}
/**
 * Find the bracket at (or just before) the cursor and its partner.
 * Strings and comments are skipped, like the real lexer does.
 */
export function bracketMatch(source, cursor) {
    const spans = tokenize(source).filter((t) => t.cls === "delimiter");
    const brackets = spans.filter((t) => t.text !== ",");
    let target = brackets.find((t) => t.start === cursor);
    if (!target)
        target = brackets.find((t) => t.end === cursor);
    if (!target)
        return { at: -1, partner: -1 };
    const stack = [];
    let partner = -1;
    for (const tok of brackets) {
        if (OPEN.includes(tok.text)) {
            stack.push(tok);
        }
        else {
            const opener = stack.pop();
            if (opener && PAIRS[tok.text] === opener.text) {
                if (opener === target)
                    partner = tok.start;
                if (tok === target)
                    partner = opener.start;
            }
            else if (tok === target) {
                return { at: target.start, partner: -1 };
            }
        }
    }
    return { at: target.start, partner };
}
/** True while the buffered input still needs more lines before submitting. */
export function needsContinuation(source) {
    let depth = 0;
    let trailingPct = false;
    for (const tok of tokenize(source)) {
        if (tok.cls === "comment" || tok.cls === "whitespace")
            continue;
        if (tok.cls === "delimiter" && OPEN.includes(tok.text))
            depth++;
        else if (tok.cls === "delimiter" && CLOSE.includes(tok.text))
            depth--;
        trailingPct = tok.cls === "continuation";
        if (tok.cls === "string" && !tok.text.endsWith('"'))
            return false;
    }
    return depth > 0 || trailingPct;
}
/** The word fragment immediately before the cursor, for completion. */
export function fragmentAt(source, cursor) {
    let start = cursor;
    while (start > 0 && isWord(source[start - 1]))
        start--;
    if (start > 0 && source[start - 1] === "$")
        start--;
    return source.slice(start, cursor);
}
